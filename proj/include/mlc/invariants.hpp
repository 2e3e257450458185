#pragma once

#include <map>

#include "mlc/cohomology.hpp"

namespace mlc {

// anch^i(p,M): projected degrees where the localized Ext module survives,
// read off the dir(p) coordinates.
struct AnchorSet {
  MonomialPrime prime;
  int level = 0;
  Pattern dirs;            // dir(p), coarse colors
  std::vector<Vec> points;  // in Z^{#dirs}, sorted
};

AnchorSet anchor_points(const MonomialPrime& p, const GradedModule& m, int level);
// Same set computed after regrading along phi(p); the equality of the two
// routes is itself a checked theorem.
AnchorSet anchor_points_via_regrade(const MonomialPrime& p, const GradedModule& m, int level);
// Union of anch^j over all levels.
std::vector<Vec> anchor_points_all(const MonomialPrime& p, const GradedModule& m);

// Ordinary Bass number in the *maximal case (all variables in p).
std::int64_t bass_number(const MonomialPrime& p, const GradedModule& m, int level);

// end(H^j_b(M)): maximal projected supporting degrees.
struct EndSet {
  MonomialIdeal ideal;
  int index = 0;
  Pattern dirs;            // dir(b)
  std::vector<Vec> points;  // in Z^{#dirs}, sorted
};

EndSet end_of(const MonomialIdeal& b, const GradedModule& m, int index);

// bnd^Q(M): maximal elements of the union of ends over all indices for c^Q.
std::vector<Vec> q_bound(const GradedModule& m, const Pattern& q);

// Q-finiteness dimension with witnesses. value empty means infinite.
struct FinitenessG {
  std::optional<int> value;
  std::vector<QDomain> witnesses;  // containment witness per index below value
  std::optional<Box> escape_box;   // coarse support box escaping every Q-domain
  std::optional<Vec> escape_degree;
};

FinitenessG finiteness_dimension_g(const MonomialIdeal& b, const GradedModule& m, const Pattern& q);

// f^a_b(M): least i with a not inside the radical annihilator of H^i_b(M).
std::optional<int> finiteness_dimension_f(const MonomialIdeal& a, const MonomialIdeal& b,
                                          const GradedModule& m);

// Supporting degrees of a tensor product read off the two factors' data.
Region kunneth_support(const std::map<int, Region>& supp_a, const std::map<int, Region>& supp_b,
                       const Region& base_a, const Region& base_b, int index);

// ---- theorem checkers ----

struct Report {
  enum class Status { Pass, Fail, Inconclusive };
  std::string check;
  std::string instance_id;
  Status status = Status::Pass;
  std::string note;
  std::vector<std::string> details;

  std::string to_string() const;
  bool passed() const { return status == Status::Pass; }
};

std::string instance_hash(const std::string& canonical);

// anch^i(p,M) agrees with the regraded computation for every level.
Report check_anchor_regrade(const std::string& id, const MonomialPrime& p, const GradedModule& m);
// Every anchor point of p lifts one level up along a covering prime q.
Report check_anchor_lifting(const std::string& id, const MonomialPrime& p, const MonomialPrime& q,
                            const GradedModule& m);
// Anchor points extend to the *maximal monomial prime with matching coordinates.
Report check_anchor_extension(const std::string& id, const MonomialPrime& p, const GradedModule& m);
// max of cumulative ends equals max of anchor projections over monomial primes.
Report check_ends_vs_anchors(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                             int max_index);
// Cumulative ends are dominated by bnd^{dir(b)}.
Report check_end_dominated(const std::string& id, const MonomialIdeal& b, const GradedModule& m);
// Cumulative anchor-projection max stabilizes at the generator count.
Report check_end_stabilization(const std::string& id, const MonomialIdeal& b, const GradedModule& m);
// Reduction of cumulative ends to the *maximal monomial prime.
Report check_maximal_reduction(const std::string& id, const MonomialIdeal& b, const GradedModule& m);
// Vanishing corner for b containing R_+; returns the least verified corner.
Report check_vanishing_corner(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                              std::optional<std::int64_t>* corner_out = nullptr);
// Vanishing for ideals with both directions and non-directions.
Report check_mixed_vanishing(const std::string& id, const MonomialIdeal& b, const GradedModule& m);
// Every coarse component of H^i_{R_+}(M) is finite.
Report check_component_finiteness(const std::string& id, const GradedModule& m);
// Domain containment and annihilation agree below f.
Report check_domain_annihilator(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                                const Vec& mdir, int f);
// f over the ideal generated by the degrees in T equals inf of g values.
Report check_f_equals_g(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                        const std::vector<Vec>& degrees);
// f of the unit ideal equals the grade (least nonvanishing index).
Report check_grade_identity(const std::string& id, const MonomialIdeal& b, const GradedModule& m);
// f of the variable ideal c equals the least index with infinite support.
Report check_finitely_graded_identity(const std::string& id, const MonomialIdeal& b,
                                      const GradedModule& m);

}  // namespace mlc
