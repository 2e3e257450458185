#pragma once

#include <set>
#include <string>
#include <vector>

#include "mlc/exactlin.hpp"
#include "mlc/lattice.hpp"

namespace mlc {

using Expo = std::vector<std::int64_t>;  // fine exponent vector, length n

// Assignment of a coarse degree in N_0^r to each of n variables. Color 0
// marks a degree-zero variable (these arise from regrading).
class GradingSpec {
 public:
  GradingSpec() = default;
  GradingSpec(std::vector<std::string> var_names, std::vector<int> colors, int rank,
              FieldSpec field = FieldSpec::rationals());

  int nvars() const { return static_cast<int>(m_colors.size()); }
  int rank() const { return m_rank; }
  int color(int var) const { return m_colors[var]; }  // 0 = degree zero
  const std::vector<int>& colors() const { return m_colors; }
  const std::string& var_name(int var) const { return m_names[var]; }
  const std::vector<std::string>& var_names() const { return m_names; }
  const FieldSpec& field() const { return m_field; }
  void set_field(FieldSpec f) { m_field = f; }

  // True when every color 1..r has at least one variable.
  bool is_standard() const;
  void require_standard(const std::string& op) const;

  Vec coarse_degree(const Expo& a) const;
  std::vector<Interval> coarse_box(const Box& fine) const;
  std::vector<int> vars_of_color(int color) const;

  // All monomials in the colored variables with coarse degree exactly d.
  std::vector<Expo> monomials_of_degree(const Vec& d) const;

  // Grading with colors composed through a projection. Requires the
  // projection to send each unit degree to a unit degree or zero.
  GradingSpec regrade(const Projection& phi) const;

  bool operator==(const GradingSpec&) const = default;

 private:
  std::vector<std::string> m_names;
  std::vector<int> m_colors;
  int m_rank = 0;
  FieldSpec m_field = FieldSpec::rationals();
};

// A monomial x^a with a >= 0.
struct Monomial {
  Expo e;

  explicit Monomial(Expo e_);
  int nvars() const { return static_cast<int>(e.size()); }
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Pattern support() const;  // variables with positive exponent
  std::string to_string(const GradingSpec& g) const;
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const { return e < o.e; }
};

// Monomial ideal given by its minimal generators. The zero ideal has no
// generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal in unknown ring; set nvars via make
  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit(int nvars);
  static MonomialIdeal make(int nvars, std::vector<Monomial> gens);  // minimalizes

  int nvars() const { return m_nvars; }
  const std::vector<Monomial>& gens() const { return m_gens; }
  bool is_zero() const { return m_gens.empty(); }
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  // Membership ignoring the exponents on a set of variables.
  bool contains_off(const Expo& e, const Pattern& ignored) const;

  MonomialIdeal sum(const MonomialIdeal& o) const;
  MonomialIdeal intersection(const MonomialIdeal& o) const;
  MonomialIdeal colon(const Monomial& u) const;
  MonomialIdeal saturate(const Pattern& f) const;  // invert variables in f
  MonomialIdeal radical() const;

  bool operator==(const MonomialIdeal&) const = default;
  std::string to_string(const GradingSpec& g) const;

 private:
  int m_nvars = 0;
  std::vector<Monomial> m_gens;
};

// The prime (x_v : v in vars).
struct MonomialPrime {
  int nvars = 0;
  Pattern vars;  // over variable indices

  MonomialPrime(int nvars_, Pattern vars_);
  MonomialIdeal ideal() const;
  bool is_maximal() const { return vars.count() == nvars; }
  bool operator==(const MonomialPrime&) const = default;
  std::string to_string(const GradingSpec& g) const;
};

// Height-one step: q adds exactly one variable to p, so no graded prime
// sits strictly between them.
bool saturated_chain(const MonomialPrime& p, const MonomialPrime& q);

// dir(b): colors j such that every color-j variable lies in the radical.
Pattern directions(const MonomialIdeal& b, const GradingSpec& g);
Pattern directions(const MonomialPrime& p, const GradingSpec& g);

// Ideal generated by all products of one variable per color, minimalized.
MonomialIdeal ideal_Rplus(const GradingSpec& g);
// Ideal generated by all variables (of positive degree).
MonomialIdeal ideal_c(const GradingSpec& g);
// Ideal generated by the variables whose color lies in q.
MonomialIdeal ideal_cQ(const GradingSpec& g, const Pattern& q);

// Does a contain every monomial of every coarse degree >= t?
bool upward_closure_holds(const MonomialIdeal& a, const Vec& t, const GradingSpec& g);

// Minimal monomial primes over b.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& b);
// All monomial primes containing b (2^n scan).
std::vector<MonomialPrime> monomial_primes_over(const MonomialIdeal& b);

}  // namespace mlc
