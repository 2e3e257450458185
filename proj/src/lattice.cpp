#include "mlc/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace mlc {

bool vec_leq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(std::int64_t k, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

std::string vec_to_string(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

Pattern Pattern::full(int rank) {
  Pattern p{rank, 0};
  for (int i = 0; i < rank; ++i) p.add(i);
  return p;
}

Pattern Pattern::of(int rank, std::initializer_list<int> indices_1based) {
  Pattern p{rank, 0};
  for (int i : indices_1based) {
    if (i < 1 || i > rank) throw std::out_of_range("pattern index out of range");
    p.add(i - 1);
  }
  return p;
}

Pattern Pattern::support(const Vec& v) {
  Pattern p{static_cast<int>(v.size()), 0};
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add(static_cast<int>(i));
  return p;
}

std::vector<int> Pattern::indices() const {
  std::vector<int> r;
  for (int i = 0; i < rank; ++i)
    if (contains(i)) r.push_back(i);
  return r;
}

std::string Pattern::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) os << ",";
    os << (i + 1);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << "[" << (lo_inf ? std::string("-inf") : std::to_string(lo)) << ","
     << (hi_inf ? std::string("inf") : std::to_string(hi)) << "]";
  return os.str();
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  r.lo_inf = a.lo_inf && b.lo_inf;
  r.hi_inf = a.hi_inf && b.hi_inf;
  if (!r.lo_inf) r.lo = a.lo_inf ? b.lo : (b.lo_inf ? a.lo : std::max(a.lo, b.lo));
  if (!r.hi_inf) r.hi = a.hi_inf ? b.hi : (b.hi_inf ? a.hi : std::min(a.hi, b.hi));
  return r;
}

Interval interval_sum(const Interval& a, const Interval& b) {
  Interval r;
  r.lo_inf = a.lo_inf || b.lo_inf;
  r.hi_inf = a.hi_inf || b.hi_inf;
  if (!r.lo_inf) r.lo = a.lo + b.lo;
  if (!r.hi_inf) r.hi = a.hi + b.hi;
  return r;
}

bool Box::empty() const {
  for (const auto& i : iv)
    if (i.empty()) return true;
  return false;
}

bool Box::contains(const Vec& p) const {
  if (static_cast<int>(p.size()) != dim()) throw std::invalid_argument("rank mismatch");
  for (size_t i = 0; i < p.size(); ++i)
    if (!iv[i].contains(p[i])) return false;
  return true;
}

bool Box::bounded_above() const {
  for (const auto& i : iv)
    if (i.hi_inf) return false;
  return true;
}

bool Box::finite() const {
  for (const auto& i : iv)
    if (!i.finite()) return false;
  return true;
}

Vec Box::upper_corner() const {
  Vec c(iv.size());
  for (size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].hi_inf) throw std::logic_error("upper_corner of unbounded box");
    c[i] = iv[i].hi;
  }
  return c;
}

Vec Box::sample_point() const {
  Vec p(iv.size());
  for (size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].empty()) throw std::logic_error("sample of empty box");
    p[i] = !iv[i].lo_inf ? iv[i].lo : (!iv[i].hi_inf ? iv[i].hi : 0);
  }
  return p;
}

std::string Box::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < iv.size(); ++i) {
    if (i) os << "x";
    os << iv[i].to_string();
  }
  return os.str();
}

Box box_all(int dim) {
  Box b;
  b.iv.assign(dim, Interval::all());
  return b;
}

Box box_point(const Vec& p) {
  Box b;
  for (auto v : p) b.iv.push_back(Interval::point(v));
  return b;
}

std::optional<Box> box_intersect(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("rank mismatch");
  Box r;
  r.iv.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    Interval iv = intersect(a.iv[i], b.iv[i]);
    if (iv.empty()) return std::nullopt;
    r.iv.push_back(iv);
  }
  return r;
}

std::vector<Box> box_subtract(const Box& a, const Box& b) {
  auto mid = box_intersect(a, b);
  if (!mid || a.empty()) return a.empty() ? std::vector<Box>{} : std::vector<Box>{a};
  std::vector<Box> out;
  Box rest = a;
  for (int v = 0; v < a.dim(); ++v) {
    const Interval& c = mid->iv[v];
    // piece below the intersection slab
    if (!c.lo_inf && (rest.iv[v].lo_inf || rest.iv[v].lo < c.lo)) {
      Box below = rest;
      below.iv[v].hi = c.lo - 1;
      below.iv[v].hi_inf = false;
      if (!below.empty()) out.push_back(below);
    }
    // piece above
    if (!c.hi_inf && (rest.iv[v].hi_inf || rest.iv[v].hi > c.hi)) {
      Box above = rest;
      above.iv[v].lo = c.hi + 1;
      above.iv[v].lo_inf = false;
      if (!above.empty()) out.push_back(above);
    }
    rest.iv[v] = c;
  }
  return out;
}

bool Region::is_empty() const {
  for (const auto& b : boxes)
    if (!b.empty()) return false;
  return true;
}

bool Region::contains(const Vec& p) const {
  for (const auto& b : boxes)
    if (b.contains(p)) return true;
  return false;
}

void Region::add(Box b) {
  if (b.dim() != dim) throw std::invalid_argument("rank mismatch");
  if (!b.empty()) boxes.push_back(std::move(b));
}

std::string Region::to_string() const {
  if (is_empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (i) os << " u ";
    os << boxes[i].to_string();
  }
  return os.str();
}

Region region_subtract(const Region& a, const Region& b) {
  if (a.dim != b.dim) throw std::invalid_argument("rank mismatch");
  Region out = Region::empty(a.dim);
  for (const auto& box : a.boxes) {
    std::vector<Box> parts{box};
    for (const auto& cut : b.boxes) {
      std::vector<Box> next;
      for (const auto& p : parts) {
        auto pieces = box_subtract(p, cut);
        next.insert(next.end(), pieces.begin(), pieces.end());
      }
      parts = std::move(next);
      if (parts.empty()) break;
    }
    for (auto& p : parts) out.add(std::move(p));
  }
  return out;
}

Region region_intersect(const Region& a, const Region& b) {
  if (a.dim != b.dim) throw std::invalid_argument("rank mismatch");
  Region out = Region::empty(a.dim);
  for (const auto& x : a.boxes)
    for (const auto& y : b.boxes)
      if (auto m = box_intersect(x, y)) out.add(*m);
  return out;
}

bool region_subset(const Region& a, const Region& b) { return region_subtract(a, b).is_empty(); }

std::vector<Vec> region_points(const Region& r) {
  std::vector<Vec> pts;
  for (const auto& b : r.boxes) {
    if (b.empty()) continue;
    if (!b.finite()) throw std::logic_error("region_points on infinite region");
    Vec cur(b.dim());
    // odometer enumeration
    for (int i = 0; i < b.dim(); ++i) cur[i] = b.iv[i].lo;
    while (true) {
      pts.push_back(cur);
      int i = 0;
      for (; i < b.dim(); ++i) {
        if (cur[i] < b.iv[i].hi) {
          ++cur[i];
          for (int j = 0; j < i; ++j) cur[j] = b.iv[j].lo;
          break;
        }
      }
      if (i == b.dim()) break;
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

PointSet PointSet::of_points(int dim, std::vector<Vec> pts) {
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("rank mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  PointSet s;
  s.dim = dim;
  s.data = std::move(pts);
  return s;
}

PointSet PointSet::of_region(Region r) {
  PointSet s;
  s.dim = r.dim;
  s.data = std::move(r);
  return s;
}

std::string PointSet::to_string() const {
  if (is_finite_list()) {
    std::ostringstream os;
    os << "{";
    const auto& ps = points();
    for (size_t i = 0; i < ps.size(); ++i) {
      if (i) os << ",";
      os << vec_to_string(ps[i]);
    }
    os << "}";
    return os.str();
  }
  return region().to_string();
}

namespace {

std::vector<Vec> pairwise_maximal(std::vector<Vec> pts) {
  std::vector<Vec> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < pts.size() && !dominated; ++j)
      if (i != j && pts[i] != pts[j] && vec_leq(pts[i], pts[j])) dominated = true;
    if (!dominated) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Does the box contain a point strictly greater than c?
bool box_strictly_dominates(const Box& b, const Vec& c) {
  if (b.empty()) return false;
  for (int v = 0; v < b.dim(); ++v)
    if (!b.iv[v].hi_inf && b.iv[v].hi < c[v]) return false;
  for (int v = 0; v < b.dim(); ++v)
    if (b.iv[v].hi_inf || b.iv[v].hi >= c[v] + 1) return true;
  return false;
}

}  // namespace

PointSet maximal_elements(const PointSet& s) {
  if (s.is_finite_list()) return PointSet::of_points(s.dim, pairwise_maximal(s.points()));

  // Region inputs: only upper corners of bounded-above boxes can be maximal,
  // and a corner dies if any box still has a strictly larger point.
  const Region& r = s.region();
  std::vector<Vec> candidates;
  for (const auto& b : r.boxes)
    if (!b.empty() && b.bounded_above()) candidates.push_back(b.upper_corner());
  std::vector<Vec> alive;
  for (const auto& c : candidates) {
    bool dead = false;
    for (const auto& b : r.boxes)
      if (box_strictly_dominates(b, c)) {
        dead = true;
        break;
      }
    if (!dead) alive.push_back(c);
  }
  return PointSet::of_points(s.dim, pairwise_maximal(std::move(alive)));
}

namespace {

Region down_closure(const PointSet& s) {
  Region r = Region::empty(s.dim);
  if (s.is_finite_list()) {
    for (const auto& p : s.points()) {
      Box b;
      for (auto v : p) b.iv.push_back(Interval::at_most(v));
      r.add(std::move(b));
    }
  } else {
    for (const auto& b : s.region().boxes) {
      if (b.empty()) continue;
      Box d = b;
      for (auto& iv : d.iv) {
        iv.lo_inf = true;
        iv.lo = 0;
      }
      r.add(std::move(d));
    }
  }
  return r;
}

}  // namespace

bool dominates(const PointSet& sigma, const PointSet& delta) {
  if (sigma.dim != delta.dim) throw std::invalid_argument("rank mismatch");
  Region down = down_closure(delta);
  if (sigma.is_finite_list()) {
    for (const auto& p : sigma.points())
      if (!down.contains(p)) return false;
    return true;
  }
  return region_subset(sigma.region(), down);
}

Projection Projection::keep(int source_rank, const Pattern& p) {
  if (p.rank != source_rank) throw std::invalid_argument("rank mismatch");
  Projection pr;
  pr.source_rank = source_rank;
  pr.kept = p.indices();
  pr.target_rank = static_cast<int>(pr.kept.size());
  return pr;
}

Projection Projection::identity(int rank) { return keep(rank, Pattern::full(rank)); }

Projection Projection::from_matrix(int source_rank, std::vector<std::vector<std::int64_t>> m) {
  Projection pr;
  pr.source_rank = source_rank;
  pr.target_rank = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != source_rank) throw std::invalid_argument("matrix shape mismatch");
    for (auto v : row)
      if (v < 0) throw std::invalid_argument("projection matrix entries must be nonnegative");
  }
  pr.mat = std::move(m);
  return pr;
}

Projection Projection::relative(const Pattern& p_dirs, const Pattern& b_dirs) {
  if (!b_dirs.subset_of(p_dirs))
    throw std::invalid_argument("relative projection undefined: directions " + b_dirs.to_string() +
                                " not contained in " + p_dirs.to_string());
  auto pidx = p_dirs.indices();
  Projection pr;
  pr.source_rank = static_cast<int>(pidx.size());
  for (size_t pos = 0; pos < pidx.size(); ++pos)
    if (b_dirs.contains(pidx[pos])) pr.kept.push_back(static_cast<int>(pos));
  pr.target_rank = static_cast<int>(pr.kept.size());
  return pr;
}

Vec Projection::apply(const Vec& n) const {
  if (static_cast<int>(n.size()) != source_rank) throw std::invalid_argument("rank mismatch");
  Vec out(target_rank, 0);
  if (is_coordinate()) {
    for (int i = 0; i < target_rank; ++i) out[i] = n[kept[i]];
  } else {
    for (int i = 0; i < target_rank; ++i)
      for (int j = 0; j < source_rank; ++j) out[i] += mat[i][j] * n[j];
  }
  return out;
}

Interval Projection::apply_row(const std::vector<Interval>& iv, int row) const {
  if (is_coordinate()) return iv[kept[row]];
  Interval acc = Interval::point(0);
  for (int j = 0; j < source_rank; ++j) {
    std::int64_t c = mat[row][j];
    if (c == 0) continue;
    Interval scaled = iv[j];
    if (!scaled.lo_inf) scaled.lo *= c;
    if (!scaled.hi_inf) scaled.hi *= c;
    acc = interval_sum(acc, scaled);
  }
  return acc;
}

std::vector<Interval> Projection::apply_box(const Box& b) const {
  if (b.dim() != source_rank) throw std::invalid_argument("rank mismatch");
  std::vector<Interval> out;
  out.reserve(target_rank);
  for (int i = 0; i < target_rank; ++i) out.push_back(apply_row(b.iv, i));
  return out;
}

Projection compose_projection(const Projection& outer, const Projection& inner) {
  if (outer.source_rank != inner.target_rank) throw std::invalid_argument("composition rank mismatch");
  if (outer.is_coordinate() && inner.is_coordinate()) {
    Projection pr;
    pr.source_rank = inner.source_rank;
    pr.target_rank = outer.target_rank;
    for (int i = 0; i < outer.target_rank; ++i) pr.kept.push_back(inner.kept[outer.kept[i]]);
    return pr;
  }
  auto as_matrix = [](const Projection& p) {
    if (!p.is_coordinate()) return p.mat;
    std::vector<std::vector<std::int64_t>> m(p.target_rank, std::vector<std::int64_t>(p.source_rank, 0));
    for (int i = 0; i < p.target_rank; ++i) m[i][p.kept[i]] = 1;
    return m;
  };
  auto a = as_matrix(outer), b = as_matrix(inner);
  std::vector<std::vector<std::int64_t>> m(outer.target_rank, std::vector<std::int64_t>(inner.source_rank, 0));
  for (int i = 0; i < outer.target_rank; ++i)
    for (int k = 0; k < outer.source_rank; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < inner.source_rank; ++j) m[i][j] += a[i][k] * b[k][j];
  return Projection::from_matrix(inner.source_rank, std::move(m));
}

QDomain::QDomain(Vec s_, Vec t_, Pattern q_) : s(std::move(s_)), t(std::move(t_)), q(q_) {
  if (s.size() != t.size() || static_cast<int>(s.size()) != q.rank)
    throw std::invalid_argument("rank mismatch");
  if (!vec_leq(s, t)) throw std::invalid_argument("domain requires s <= t");
  if (!Pattern::support(vec_sub(t, s)).subset_of(q))
    throw std::invalid_argument("strip coordinates exceed the declared pattern");
}

QDomain QDomain::empty_domain(int rank) {
  return QDomain(Vec(rank, 0), Vec(rank, 0), Pattern::empty(rank));
}

bool QDomain::contains(const Vec& n) const {
  if (n.size() != s.size()) throw std::invalid_argument("rank mismatch");
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] <= n[i] && n[i] < t[i]) return true;
  return false;
}

bool QDomain::is_empty_set() const { return s == t; }

std::string QDomain::to_string() const {
  return "X(" + vec_to_string(s) + "," + vec_to_string(t) + ")";
}

bool qdomain_contains(const QDomain& x, const Vec& n) { return x.contains(n); }

QDomain qdomain_cover(const std::vector<QDomain>& xs, const Pattern& q) {
  for (const auto& x : xs)
    if (!x.q.subset_of(q))
      throw std::invalid_argument("cover input with pattern " + x.q.to_string() +
                                  " violates target pattern " + q.to_string());
  const int r = q.rank;
  if (xs.empty()) {
    return QDomain(Vec(r, 0), Vec(r, 0), q);
  }
  Vec s(r), t(r);
  for (int i = 0; i < r; ++i) {
    std::int64_t mn = xs[0].s[i], mx = xs[0].t[i];
    for (const auto& x : xs) {
      mn = std::min(mn, x.s[i]);
      mx = std::max(mx, x.t[i]);
    }
    s[i] = mn;
    t[i] = q.contains(i) ? mx : mn;
  }
  return QDomain(std::move(s), std::move(t), q);
}

std::int64_t escape_multiplier(const QDomain& x, const Vec& m) {
  if (static_cast<int>(m.size()) != x.rank()) throw std::invalid_argument("rank mismatch");
  bool nonzero = false;
  for (auto v : m) {
    if (v < 0) throw std::invalid_argument("multiplier direction must be nonnegative");
    if (v > 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("multiplier direction must be nonzero");
  Pattern pm = Pattern::support(m);
  if (!x.q.subset_of(pm))
    throw std::invalid_argument("domain pattern " + x.q.to_string() + " not within P(m) " + pm.to_string());
  std::int64_t u = 1;
  for (int i : pm.indices()) {
    std::int64_t gap = x.t[i] - x.s[i];
    if (gap > 0) u = std::max(u, (gap + m[i] - 1) / m[i]);
  }
  return u;
}

}  // namespace mlc
