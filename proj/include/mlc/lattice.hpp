#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mlc {

using Vec = std::vector<std::int64_t>;  // lattice point, fine or coarse

bool vec_leq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(std::int64_t k, const Vec& a);
std::string vec_to_string(const Vec& a);

// Subset of {1,...,r}, stored 0-based.
struct Pattern {
  int rank = 0;
  std::uint32_t bits = 0;

  static Pattern empty(int rank) { return Pattern{rank, 0}; }
  static Pattern full(int rank);
  static Pattern of(int rank, std::initializer_list<int> indices_1based);
  static Pattern support(const Vec& v);  // P(v) = nonzero coordinates

  bool contains(int i0) const { return (bits >> i0) & 1u; }
  void add(int i0) { bits |= (1u << i0); }
  bool subset_of(const Pattern& o) const { return (bits & ~o.bits) == 0; }
  int count() const { return __builtin_popcount(bits); }
  bool is_empty() const { return bits == 0; }
  std::vector<int> indices() const;  // sorted, 0-based
  bool operator==(const Pattern&) const = default;
  std::string to_string() const;  // {1,3}
};

// One lattice interval, possibly half-infinite.
struct Interval {
  std::int64_t lo = 0, hi = 0;
  bool lo_inf = false, hi_inf = false;

  static Interval all() { return Interval{0, 0, true, true}; }
  static Interval at_least(std::int64_t lo) { return Interval{lo, 0, false, true}; }
  static Interval at_most(std::int64_t hi) { return Interval{0, hi, true, false}; }
  static Interval closed(std::int64_t lo, std::int64_t hi) { return Interval{lo, hi, false, false}; }
  static Interval point(std::int64_t v) { return Interval{v, v, false, false}; }

  bool empty() const { return !lo_inf && !hi_inf && lo > hi; }
  bool contains(std::int64_t v) const { return (lo_inf || v >= lo) && (hi_inf || v <= hi); }
  bool finite() const { return !lo_inf && !hi_inf; }
  std::int64_t size_or_neg() const { return finite() ? hi - lo + 1 : -1; }
  bool operator==(const Interval&) const = default;
  std::string to_string() const;
};

Interval intersect(const Interval& a, const Interval& b);
// Interval arithmetic sum with infinity propagation.
Interval interval_sum(const Interval& a, const Interval& b);

// Axis-aligned product of intervals.
struct Box {
  std::vector<Interval> iv;

  int dim() const { return static_cast<int>(iv.size()); }
  bool empty() const;
  bool contains(const Vec& p) const;
  bool bounded_above() const;
  bool finite() const;
  Vec upper_corner() const;  // requires bounded_above
  Vec sample_point() const;  // any point; requires nonempty
  bool operator==(const Box&) const = default;
  std::string to_string() const;
};

Box box_all(int dim);
Box box_point(const Vec& p);
std::optional<Box> box_intersect(const Box& a, const Box& b);
// a minus b as a disjoint list of boxes
std::vector<Box> box_subtract(const Box& a, const Box& b);

// Finite union of boxes in Z^dim; not necessarily disjoint.
struct Region {
  int dim = 0;
  std::vector<Box> boxes;

  static Region empty(int dim) { return Region{dim, {}}; }
  bool is_empty() const;
  bool contains(const Vec& p) const;
  void add(Box b);
  std::string to_string() const;
};

Region region_subtract(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);
// All lattice points of a finite region, sorted lex, duplicate free.
std::vector<Vec> region_points(const Region& r);

// Finite point list or a box-union region, both read as subsets of Z^dim.
struct PointSet {
  int dim = 0;
  std::variant<std::vector<Vec>, Region> data;

  static PointSet of_points(int dim, std::vector<Vec> pts);  // sorts, dedups
  static PointSet of_region(Region r);
  bool is_finite_list() const { return std::holds_alternative<std::vector<Vec>>(data); }
  const std::vector<Vec>& points() const { return std::get<std::vector<Vec>>(data); }
  const Region& region() const { return std::get<Region>(data); }
  std::string to_string() const;
};

// <=-maximal members; empty when no maximal member exists.
PointSet maximal_elements(const PointSet& s);
// Every n in sigma is <= some m in delta.
bool dominates(const PointSet& sigma, const PointSet& delta);

// Coordinate projection of Z^r, or a general homomorphism given by a
// nonnegative integer matrix (rows index target coordinates).
struct Projection {
  int source_rank = 0;
  int target_rank = 0;
  std::vector<int> kept;                       // 0-based, strictly increasing; empty if matrix form
  std::vector<std::vector<std::int64_t>> mat;  // target_rank x source_rank, or empty

  static Projection keep(int source_rank, const Pattern& p);
  static Projection identity(int rank);
  static Projection from_matrix(int source_rank, std::vector<std::vector<std::int64_t>> m);
  // phi(p;b): from dir(p)-coordinates to dir(b)-coordinates; requires b_dirs a subset of p_dirs.
  static Projection relative(const Pattern& p_dirs, const Pattern& b_dirs);

  bool is_coordinate() const { return mat.empty(); }
  Vec apply(const Vec& n) const;
  Interval apply_row(const std::vector<Interval>& iv, int row) const;
  std::vector<Interval> apply_box(const Box& b) const;
};

// outer(inner(x)) as a single projection
Projection compose_projection(const Projection& outer, const Projection& inner);

// X(s,t): points n with s_i <= n_i < t_i for some i; q confines the strip
// coordinates (P(t-s) must be a subset of q).
struct QDomain {
  Vec s, t;
  Pattern q;

  QDomain(Vec s_, Vec t_, Pattern q_);
  static QDomain empty_domain(int rank);
  int rank() const { return static_cast<int>(s.size()); }
  bool contains(const Vec& n) const;
  bool is_empty_set() const;
  std::string to_string() const;
};

bool qdomain_contains(const QDomain& x, const Vec& n);
// Smallest min/max cover of the inputs with strips confined to q.
QDomain qdomain_cover(const std::vector<QDomain>& xs, const Pattern& q);
// u such that u*m >= t-s on P(m); then every w escapes x within #P(m) hops of u*m.
std::int64_t escape_multiplier(const QDomain& x, const Vec& m);

}  // namespace mlc
