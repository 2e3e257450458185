#include "mlc/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace mlc {

namespace {

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

std::vector<Interval> intervals_from_thresholds(std::vector<std::int64_t> th) {
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  std::vector<Interval> out;
  if (th.empty()) {
    out.push_back(Interval::all());
    return out;
  }
  out.push_back(Interval::at_most(th.front() - 1));
  for (size_t k = 0; k + 1 < th.size(); ++k) out.push_back(Interval::closed(th[k], th[k + 1] - 1));
  out.push_back(Interval::at_least(th.back()));
  return out;
}

}  // namespace

DegreewiseComplex DegreewiseComplex::cech(const MonomialIdeal& b, GradedModule m, Pattern inverted_vars) {
  DegreewiseComplex c;
  c.m_kind = Kind::Cech;
  c.m_gens = b.gens();
  c.m_module = std::move(m);
  if (b.nvars() != c.m_module.nvars()) throw std::invalid_argument("ideal/module variable mismatch");
  if (inverted_vars.rank == 0) inverted_vars = Pattern::empty(c.m_module.nvars());
  if (inverted_vars.rank != c.m_module.nvars()) throw std::invalid_argument("inverted set rank mismatch");
  c.m_inverted = inverted_vars;
  c.m_length = static_cast<int>(c.m_gens.size());
  return c;
}

DegreewiseComplex DegreewiseComplex::koszul(const Pattern& vars, GradedModule m, Pattern inverted_vars) {
  DegreewiseComplex c;
  c.m_kind = Kind::Koszul;
  c.m_vars = vars;
  c.m_module = std::move(m);
  if (vars.rank != c.m_module.nvars()) throw std::invalid_argument("variable set rank mismatch");
  if (inverted_vars.rank == 0) inverted_vars = Pattern::empty(c.m_module.nvars());
  if (inverted_vars.rank != c.m_module.nvars()) throw std::invalid_argument("inverted set rank mismatch");
  c.m_inverted = inverted_vars;
  c.m_length = vars.count();
  return c;
}

Pattern DegreewiseComplex::slot_inverted(std::uint32_t slot) const {
  Pattern f = m_inverted;
  for (int k = 0; k < m_length; ++k)
    if ((slot >> k) & 1u) f.bits |= m_gens[k].support().bits;
  return f;
}

bool DegreewiseComplex::slot_alive(int summand, std::uint32_t slot, const Vec& a) const {
  const Summand& s = m_module.summands()[summand];
  const int n = m_module.nvars();
  Expo c(n);
  if (m_kind == Kind::Cech) {
    Pattern f = slot_inverted(slot);
    for (int v = 0; v < n; ++v) {
      c[v] = a[v] - s.shift[v];
      if (!f.contains(v) && c[v] < 0) return false;
    }
    return !s.ideal.contains_off(c, f);
  }
  auto vars = m_vars.indices();
  for (int v = 0; v < n; ++v) c[v] = a[v] - s.shift[v];
  for (int k = 0; k < m_length; ++k)
    if ((slot >> k) & 1u) c[vars[k]] += 1;
  for (int v = 0; v < n; ++v)
    if (!m_inverted.contains(v) && c[v] < 0) return false;
  return !s.ideal.contains_off(c, m_inverted);
}

std::uint32_t DegreewiseComplex::alive_mask(int summand, const Vec& a) const {
  std::uint32_t mask = 0;
  for (std::uint32_t slot = 0; slot < (1u << m_length); ++slot)
    if (slot_alive(summand, slot, a)) mask |= (1u << slot);
  return mask;
}

IntMat DegreewiseComplex::differential(std::uint32_t alive, int t) const {
  std::vector<std::uint32_t> src, tgt;
  for (std::uint32_t slot = 0; slot < (1u << m_length); ++slot) {
    if (!((alive >> slot) & 1u)) continue;
    int pc = popcount(slot);
    if (pc == t) src.push_back(slot);
    if (pc == t + 1) tgt.push_back(slot);
  }
  IntMat d(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    std::uint32_t T = src[j];
    for (int p = 0; p < m_length; ++p) {
      if ((T >> p) & 1u) continue;
      std::uint32_t T2 = T | (1u << p);
      auto it = std::lower_bound(tgt.begin(), tgt.end(), T2);
      if (it == tgt.end() || *it != T2) continue;
      int sign = (popcount(T & ((1u << p) - 1)) % 2 == 0) ? 1 : -1;
      d.at(static_cast<int>(it - tgt.begin()), static_cast<int>(j)) = sign;
    }
  }
  return d;
}

std::vector<std::vector<std::int64_t>> DegreewiseComplex::thresholds(int summand) const {
  const Summand& s = m_module.summands()[summand];
  const int n = m_module.nvars();
  std::vector<std::vector<std::int64_t>> th(n);
  for (int v = 0; v < n; ++v) {
    th[v].push_back(s.shift[v]);
    for (const auto& g : s.ideal.gens()) th[v].push_back(s.shift[v] + g.e[v]);
    if (m_kind == Kind::Koszul) {
      th[v].push_back(s.shift[v] - 1);
      for (const auto& g : s.ideal.gens()) th[v].push_back(s.shift[v] + g.e[v] - 1);
    }
    std::sort(th[v].begin(), th[v].end());
    th[v].erase(std::unique(th[v].begin(), th[v].end()), th[v].end());
  }
  return th;
}

const std::vector<std::vector<DegreewiseComplex::Cell>>& DegreewiseComplex::cells() const {
  if (m_cells) return *m_cells;
  auto out = std::make_shared<std::vector<std::vector<Cell>>>();
  const FieldSpec& field = grading().field();
  std::map<std::uint32_t, std::vector<int>> dim_cache;
  for (size_t j = 0; j < m_module.summands().size(); ++j) {
    std::vector<Cell> cells;
    auto th = thresholds(static_cast<int>(j));
    std::vector<std::vector<Interval>> axes;
    for (int v = 0; v < m_module.nvars(); ++v) axes.push_back(intervals_from_thresholds(th[v]));
    std::vector<size_t> idx(axes.size(), 0);
    while (true) {
      Box box;
      for (size_t v = 0; v < axes.size(); ++v) box.iv.push_back(axes[v][idx[v]]);
      Vec sample = box.sample_point();
      std::uint32_t mask = alive_mask(static_cast<int>(j), sample);
      auto it = dim_cache.find(mask);
      if (it == dim_cache.end()) {
        std::vector<int> dims(m_length + 1, 0);
        std::vector<int> rk(m_length + 1, 0);
        std::vector<int> cnt(m_length + 1, 0);
        for (std::uint32_t slot = 0; slot < (1u << m_length); ++slot)
          if ((mask >> slot) & 1u) cnt[popcount(slot)]++;
        for (int t = 0; t < m_length; ++t) rk[t] = rank(differential(mask, t), field);
        for (int t = 0; t <= m_length; ++t)
          dims[t] = cnt[t] - (t < m_length ? rk[t] : 0) - (t > 0 ? rk[t - 1] : 0);
        it = dim_cache.emplace(mask, std::move(dims)).first;
      }
      cells.push_back(Cell{std::move(box), mask, it->second});
      size_t v = 0;
      for (; v < axes.size(); ++v) {
        if (++idx[v] < axes[v].size()) break;
        idx[v] = 0;
      }
      if (v == axes.size()) break;
    }
    out->push_back(std::move(cells));
  }
  m_cells = std::move(out);
  return *m_cells;
}

std::vector<int> DegreewiseComplex::slice_dims(const Vec& a) const {
  const FieldSpec& field = grading().field();
  std::vector<int> dims(m_length + 1, 0);
  for (size_t j = 0; j < m_module.summands().size(); ++j) {
    std::uint32_t mask = alive_mask(static_cast<int>(j), a);
    std::vector<int> cnt(m_length + 1, 0);
    for (std::uint32_t slot = 0; slot < (1u << m_length); ++slot)
      if ((mask >> slot) & 1u) cnt[popcount(slot)]++;
    std::vector<int> rk(m_length + 1, 0);
    for (int t = 0; t < m_length; ++t) rk[t] = rank(differential(mask, t), field);
    for (int t = 0; t <= m_length; ++t)
      dims[t] += cnt[t] - (t < m_length ? rk[t] : 0) - (t > 0 ? rk[t - 1] : 0);
  }
  return dims;
}

Region localization_support(const Summand& s, const Pattern& f) {
  const int n = static_cast<int>(s.shift.size());
  Box quadrant;
  for (int v = 0; v < n; ++v)
    quadrant.iv.push_back(f.contains(v) ? Interval::all() : Interval::at_least(s.shift[v]));
  Region reg = Region::empty(n);
  reg.add(quadrant);
  for (const auto& g : s.ideal.gens()) {
    Box cone;
    for (int v = 0; v < n; ++v)
      cone.iv.push_back(f.contains(v) ? Interval::all() : Interval::at_least(s.shift[v] + g.e[v]));
    Region cut = Region::empty(n);
    cut.add(std::move(cone));
    reg = region_subtract(reg, cut);
  }
  return reg;
}

bool SupportRegion::empty() const {
  for (const auto& c : cells)
    if (!c.first.empty() && c.second > 0) return false;
  return true;
}

Region SupportRegion::as_region() const {
  Region r = Region::empty(nvars);
  for (const auto& c : cells)
    if (c.second > 0) r.add(c.first);
  return r;
}

int SupportRegion::dim_at(const Vec& a) const {
  int d = 0;
  for (const auto& c : cells)
    if (c.first.contains(a)) d += c.second;
  return d;
}

std::vector<std::pair<Box, int>> SupportRegion::coarse_boxes(const GradingSpec& g) const {
  std::vector<std::pair<Box, int>> out;
  for (const auto& c : cells) {
    if (c.first.empty() || c.second <= 0) continue;
    Box cb;
    cb.iv = g.coarse_box(c.first);
    out.emplace_back(std::move(cb), c.second);
  }
  return out;
}

SupportRegion global_support(const DegreewiseComplex& c, int i) {
  SupportRegion out;
  out.nvars = c.module().nvars();
  if (i < 0 || i > c.length()) return out;
  for (const auto& summand_cells : c.cells())
    for (const auto& cell : summand_cells)
      if (cell.dims[i] > 0 && !cell.box.empty()) out.cells.emplace_back(cell.box, cell.dims[i]);
  return out;
}

namespace {

// #,{x in product of intervals : sum x = target}; nullopt means infinite.
std::optional<std::int64_t> count_sum_fiber(const std::vector<Interval>& iv, std::int64_t target) {
  if (iv.empty()) return target == 0 ? 1 : 0;
  // feasibility
  bool lo_all_finite = true, hi_all_finite = true;
  std::int64_t lo_sum = 0, hi_sum = 0;
  for (const auto& i : iv) {
    if (i.lo_inf) lo_all_finite = false; else lo_sum += i.lo;
    if (i.hi_inf) hi_all_finite = false; else hi_sum += i.hi;
  }
  if (lo_all_finite && target < lo_sum) return 0;
  if (hi_all_finite && target > hi_sum) return 0;
  for (size_t a = 0; a < iv.size(); ++a)
    for (size_t b = 0; b < iv.size(); ++b)
      if (a != b && iv[a].hi_inf && iv[b].lo_inf) return std::nullopt;  // slide forever
  // finite: recurse with clamped ranges
  std::function<std::int64_t(size_t, std::int64_t)> rec = [&](size_t k, std::int64_t rem) -> std::int64_t {
    if (k + 1 == iv.size()) return iv[k].contains(rem) ? 1 : 0;
    std::int64_t rest_lo = 0, rest_hi = 0;
    bool rest_lo_fin = true, rest_hi_fin = true;
    for (size_t j = k + 1; j < iv.size(); ++j) {
      if (iv[j].lo_inf) rest_lo_fin = false; else rest_lo += iv[j].lo;
      if (iv[j].hi_inf) rest_hi_fin = false; else rest_hi += iv[j].hi;
    }
    bool lo_ok = false, hi_ok = false;
    std::int64_t lo = 0, hi = 0;
    if (!iv[k].lo_inf) { lo = iv[k].lo; lo_ok = true; }
    if (rest_hi_fin) { std::int64_t alt = rem - rest_hi; if (!lo_ok || alt > lo) lo = alt; lo_ok = true; }
    if (!iv[k].hi_inf) { hi = iv[k].hi; hi_ok = true; }
    if (rest_lo_fin) { std::int64_t alt = rem - rest_lo; if (!hi_ok || alt < hi) hi = alt; hi_ok = true; }
    if (!lo_ok || !hi_ok) throw std::logic_error("unreachable: unbounded fiber in finite branch");
    std::int64_t total = 0;
    for (std::int64_t x = lo; x <= hi; ++x) total += rec(k + 1, rem - x);
    return total;
  };
  return rec(0, target);
}

}  // namespace

DimCount component_dim(const DegreewiseComplex& c, int i, const Vec& n) {
  const GradingSpec& g = c.grading();
  if (static_cast<int>(n.size()) != g.rank()) throw std::invalid_argument("rank mismatch");
  SupportRegion sup = global_support(c, i);
  std::int64_t total = 0;
  for (const auto& [box, d] : sup.cells) {
    // factor the fiber per color; degree-zero variables are unconstrained
    std::int64_t cnt = 1;
    bool zero = false, infinite = false;
    for (int col = 1; col <= g.rank() && !zero; ++col) {
      std::vector<Interval> iv;
      for (int v : g.vars_of_color(col)) iv.push_back(box.iv[v]);
      auto f = count_sum_fiber(iv, n[col - 1]);
      if (!f) infinite = true;
      else if (*f == 0) zero = true;
      else cnt = checked_mul(cnt, *f);
    }
    for (int v : g.vars_of_color(0)) {
      if (zero) break;
      if (!box.iv[v].finite()) infinite = true;
      else cnt = checked_mul(cnt, box.iv[v].size_or_neg());
    }
    if (zero) continue;
    if (infinite) return DimCount{true, 0};
    total = checked_add(total, checked_mul(cnt, d));
  }
  return DimCount{false, total};
}

bool monomial_nilpotent(const DegreewiseComplex& c, int i, const Pattern& z_support) {
  SupportRegion sup = global_support(c, i);
  for (const auto& [box, d] : sup.cells) {
    (void)d;
    bool escapes = false;
    for (int v : z_support.indices())
      if (box.iv[v].finite()) {
        escapes = true;
        break;
      }
    if (!escapes) return false;
  }
  return true;
}

bool multiplication_is_zero(const DegreewiseComplex& c, int i, const Expo& w) {
  const FieldSpec& field = c.grading().field();
  const int n = c.module().nvars();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("rank mismatch");
  for (size_t j = 0; j < c.module().summands().size(); ++j) {
    auto th = c.thresholds(static_cast<int>(j));
    std::vector<std::vector<Interval>> axes;
    for (int v = 0; v < n; ++v) {
      auto t2 = th[v];
      for (auto b : th[v]) t2.push_back(b - w[v]);
      axes.push_back(intervals_from_thresholds(std::move(t2)));
    }
    std::vector<size_t> idx(axes.size(), 0);
    while (true) {
      Box box;
      for (size_t v = 0; v < axes.size(); ++v) box.iv.push_back(axes[v][idx[v]]);
      Vec a = box.sample_point();
      Vec b = a;
      for (int v = 0; v < n; ++v) b[v] += w[v];
      std::uint32_t m0 = c.alive_mask(static_cast<int>(j), a);
      std::uint32_t m1 = c.alive_mask(static_cast<int>(j), b);
      // slots at level i on both sides
      std::vector<std::uint32_t> src, tgt;
      for (std::uint32_t slot = 0; slot < (1u << c.length()); ++slot) {
        if (popcount(slot) != i) continue;
        if ((m0 >> slot) & 1u) src.push_back(slot);
        if ((m1 >> slot) & 1u) tgt.push_back(slot);
      }
      if (!src.empty()) {
        IntMat phi(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
        for (size_t col = 0; col < src.size(); ++col) {
          auto it = std::lower_bound(tgt.begin(), tgt.end(), src[col]);
          if (it != tgt.end() && *it == src[col]) phi.at(static_cast<int>(it - tgt.begin()), static_cast<int>(col)) = 1;
        }
        IntMat d_src = c.differential(m0, i);
        IntMat d_tgt_prev =
            i > 0 ? c.differential(m1, i - 1) : IntMat(static_cast<int>(tgt.size()), 0);
        if (!induced_map_is_zero(d_src, d_tgt_prev, phi, field)) return false;
      }
      size_t v = 0;
      for (; v < axes.size(); ++v) {
        if (++idx[v] < axes[v].size()) break;
        idx[v] = 0;
      }
      if (v == axes.size()) break;
    }
  }
  return true;
}

std::optional<std::int64_t> annihilation_exponent(const DegreewiseComplex& c, int i, const Vec& m) {
  const GradingSpec& g = c.grading();
  if (static_cast<int>(m.size()) != g.rank()) throw std::invalid_argument("rank mismatch");
  bool nonzero = false;
  for (auto v : m) {
    if (v < 0) throw std::invalid_argument("annihilation direction must be nonnegative");
    if (v > 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("annihilation direction must be nonzero");

  SupportRegion sup = global_support(c, i);
  if (sup.empty()) return 0;

  auto monomials = g.monomials_of_degree(m);
  if (monomials.empty()) return 1;  // R_m = 0 in this grading
  std::int64_t cap = 2;
  for (const auto& e : monomials) {
    Monomial z{e};
    if (!monomial_nilpotent(c, i, z.support())) return std::nullopt;
    std::int64_t exit = 1;
    for (const auto& [box, d] : sup.cells) {
      (void)d;
      std::int64_t steps = -1;
      for (int v : z.support().indices())
        if (box.iv[v].finite() && (steps < 0 || box.iv[v].size_or_neg() < steps))
          steps = box.iv[v].size_or_neg();
      exit += (steps < 0 ? 0 : steps) + 1;
    }
    cap += exit;
  }
  for (std::int64_t u = 1; u <= cap; ++u) {
    bool ok = true;
    for (const auto& e : g.monomials_of_degree(vec_scale(u, m))) {
      if (!multiplication_is_zero(c, i, e)) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  throw std::logic_error("annihilation exponent exceeded its bound; engine inconsistency");
}

}  // namespace mlc
