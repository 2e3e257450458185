#include "mlc/monomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mlc {

GradingSpec::GradingSpec(std::vector<std::string> var_names, std::vector<int> colors, int rank,
                         FieldSpec field)
    : m_names(std::move(var_names)), m_colors(std::move(colors)), m_rank(rank), m_field(field) {
  if (m_names.size() != m_colors.size()) throw std::invalid_argument("grading: name/color count mismatch");
  if (m_rank < 1) throw std::invalid_argument("grading: rank must be positive");
  for (int c : m_colors)
    if (c < 0 || c > m_rank) throw std::invalid_argument("grading: color out of range");
}

bool GradingSpec::is_standard() const {
  std::vector<bool> seen(m_rank + 1, false);
  for (int c : m_colors) seen[c] = true;
  for (int j = 1; j <= m_rank; ++j)
    if (!seen[j]) return false;
  return true;
}

void GradingSpec::require_standard(const std::string& op) const {
  if (!is_standard())
    throw std::invalid_argument(op + ": requires a standard grading (every color inhabited)");
}

Vec GradingSpec::coarse_degree(const Expo& a) const {
  if (static_cast<int>(a.size()) != nvars()) throw std::invalid_argument("rank mismatch");
  Vec d(m_rank, 0);
  for (int v = 0; v < nvars(); ++v)
    if (m_colors[v] > 0) d[m_colors[v] - 1] += a[v];
  return d;
}

std::vector<Interval> GradingSpec::coarse_box(const Box& fine) const {
  if (fine.dim() != nvars()) throw std::invalid_argument("rank mismatch");
  std::vector<Interval> out(m_rank, Interval::point(0));
  for (int v = 0; v < nvars(); ++v)
    if (m_colors[v] > 0) out[m_colors[v] - 1] = interval_sum(out[m_colors[v] - 1], fine.iv[v]);
  return out;
}

std::vector<int> GradingSpec::vars_of_color(int color) const {
  std::vector<int> out;
  for (int v = 0; v < nvars(); ++v)
    if (m_colors[v] == color) out.push_back(v);
  return out;
}

std::vector<Expo> GradingSpec::monomials_of_degree(const Vec& d) const {
  if (static_cast<int>(d.size()) != m_rank) throw std::invalid_argument("rank mismatch");
  for (auto v : d)
    if (v < 0) return {};
  std::vector<Expo> acc{Expo(nvars(), 0)};
  for (int j = 1; j <= m_rank; ++j) {
    auto vars = vars_of_color(j);
    if (vars.empty()) {
      if (d[j - 1] != 0) return {};
      continue;
    }
    std::vector<Expo> next;
    for (const auto& base : acc) {
      // compositions of d[j-1] over vars
      std::function<void(size_t, std::int64_t, Expo&)> rec = [&](size_t k, std::int64_t rem, Expo& cur) {
        if (k + 1 == vars.size()) {
          cur[vars[k]] = rem;
          next.push_back(cur);
          cur[vars[k]] = 0;
          return;
        }
        for (std::int64_t take = 0; take <= rem; ++take) {
          cur[vars[k]] = take;
          rec(k + 1, rem - take, cur);
        }
        cur[vars[k]] = 0;
      };
      Expo cur = base;
      rec(0, d[j - 1], cur);
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

GradingSpec GradingSpec::regrade(const Projection& phi) const {
  if (phi.source_rank != m_rank) throw std::invalid_argument("regrade: rank mismatch");
  std::vector<int> new_colors(nvars(), 0);
  for (int v = 0; v < nvars(); ++v) {
    if (m_colors[v] == 0) continue;
    Vec unit(m_rank, 0);
    unit[m_colors[v] - 1] = 1;
    Vec img = phi.apply(unit);
    int nz = -1;
    for (int i = 0; i < phi.target_rank; ++i) {
      if (img[i] < 0) throw std::invalid_argument("regrade: resulting grading not positive");
      if (img[i] != 0) {
        if (nz >= 0 || img[i] != 1)
          throw std::invalid_argument("regrade: image degree is not a unit vector or zero");
        nz = i;
      }
    }
    new_colors[v] = nz + 1;  // 0 when image is zero
  }
  return GradingSpec(m_names, std::move(new_colors), phi.target_rank, m_field);
}

Monomial::Monomial(Expo e_) : e(std::move(e_)) {
  for (auto v : e)
    if (v < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
}

bool Monomial::is_one() const {
  for (auto v : e)
    if (v != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  if (e.size() != other.e.size()) throw std::invalid_argument("rank mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Pattern Monomial::support() const {
  Pattern p{static_cast<int>(e.size()), 0};
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) p.add(static_cast<int>(i));
  return p;
}

std::string Monomial::to_string(const GradingSpec& g) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    os << g.var_name(static_cast<int>(i));
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  return os.str();
}

MonomialIdeal MonomialIdeal::zero(int nvars) {
  MonomialIdeal I;
  I.m_nvars = nvars;
  return I;
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return make(nvars, {Monomial(Expo(nvars, 0))});
}

MonomialIdeal MonomialIdeal::make(int nvars, std::vector<Monomial> gens) {
  for (const auto& m : gens)
    if (m.nvars() != nvars) throw std::invalid_argument("generator variable count mismatch");
  std::vector<Monomial> minimal;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  MonomialIdeal I;
  I.m_nvars = nvars;
  I.m_gens = std::move(minimal);
  return I;
}

bool MonomialIdeal::is_unit() const { return m_gens.size() == 1 && m_gens[0].is_one(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : m_gens)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains_off(const Expo& e, const Pattern& ignored) const {
  for (const auto& g : m_gens) {
    bool div = true;
    for (int v = 0; v < m_nvars && div; ++v)
      if (!ignored.contains(v) && g.e[v] > e[v]) div = false;
    if (div) return true;
  }
  return false;
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
  auto gens = m_gens;
  gens.insert(gens.end(), o.m_gens.begin(), o.m_gens.end());
  return make(m_nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersection(const MonomialIdeal& o) const {
  std::vector<Monomial> gens;
  for (const auto& a : m_gens)
    for (const auto& b : o.m_gens) {
      Expo l(m_nvars);
      for (int v = 0; v < m_nvars; ++v) l[v] = std::max(a.e[v], b.e[v]);
      gens.emplace_back(std::move(l));
    }
  return make(m_nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& u) const {
  std::vector<Monomial> gens;
  for (const auto& g : m_gens) {
    Expo e(m_nvars);
    for (int v = 0; v < m_nvars; ++v) e[v] = std::max<std::int64_t>(0, g.e[v] - u.e[v]);
    gens.emplace_back(std::move(e));
  }
  return make(m_nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::saturate(const Pattern& f) const {
  std::vector<Monomial> gens;
  for (const auto& g : m_gens) {
    Expo e = g.e;
    for (int v = 0; v < m_nvars; ++v)
      if (f.contains(v)) e[v] = 0;
    gens.emplace_back(std::move(e));
  }
  return make(m_nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  for (const auto& g : m_gens) {
    Expo e = g.e;
    for (auto& v : e) v = v > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return make(m_nvars, std::move(gens));
}

std::string MonomialIdeal::to_string(const GradingSpec& g) const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < m_gens.size(); ++i) {
    if (i) os << ", ";
    os << m_gens[i].to_string(g);
  }
  os << ")";
  return os.str();
}

MonomialPrime::MonomialPrime(int nvars_, Pattern vars_) : nvars(nvars_), vars(vars_) {
  if (vars.rank != nvars) throw std::invalid_argument("prime variable set rank mismatch");
}

MonomialIdeal MonomialPrime::ideal() const {
  std::vector<Monomial> gens;
  for (int v : vars.indices()) {
    Expo e(nvars, 0);
    e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(nvars, std::move(gens));
}

std::string MonomialPrime::to_string(const GradingSpec& g) const { return ideal().to_string(g); }

bool saturated_chain(const MonomialPrime& p, const MonomialPrime& q) {
  if (p.nvars != q.nvars) throw std::invalid_argument("rank mismatch");
  return p.vars.subset_of(q.vars) && q.vars.count() == p.vars.count() + 1;
}

Pattern directions(const MonomialIdeal& b, const GradingSpec& g) {
  g.require_standard("directions");
  if (b.nvars() != g.nvars()) throw std::invalid_argument("rank mismatch");
  MonomialIdeal rad = b.radical();
  Pattern dir = Pattern::empty(g.rank());
  for (int j = 1; j <= g.rank(); ++j) {
    bool all_in = true;
    for (int v : g.vars_of_color(j)) {
      Expo e(g.nvars(), 0);
      e[v] = 1;
      if (!rad.contains(Monomial(e))) {
        all_in = false;
        break;
      }
    }
    if (all_in) dir.add(j - 1);
  }
  return dir;
}

Pattern directions(const MonomialPrime& p, const GradingSpec& g) { return directions(p.ideal(), g); }

MonomialIdeal ideal_Rplus(const GradingSpec& g) {
  g.require_standard("ideal_Rplus");
  std::vector<std::vector<int>> by_color;
  for (int j = 1; j <= g.rank(); ++j) by_color.push_back(g.vars_of_color(j));
  std::vector<Monomial> gens;
  Expo cur(g.nvars(), 0);
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == by_color.size()) {
      gens.emplace_back(cur);
      return;
    }
    for (int v : by_color[j]) {
      cur[v] += 1;
      rec(j + 1);
      cur[v] -= 1;
    }
  };
  rec(0);
  return MonomialIdeal::make(g.nvars(), std::move(gens));
}

MonomialIdeal ideal_c(const GradingSpec& g) {
  g.require_standard("ideal_c");
  return ideal_cQ(g, Pattern::full(g.rank()));
}

MonomialIdeal ideal_cQ(const GradingSpec& g, const Pattern& q) {
  g.require_standard("ideal_cQ");
  if (q.rank != g.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Monomial> gens;
  for (int j : q.indices())
    for (int v : g.vars_of_color(j + 1)) {
      Expo e(g.nvars(), 0);
      e[v] = 1;
      gens.emplace_back(std::move(e));
    }
  return MonomialIdeal::make(g.nvars(), std::move(gens));
}

bool upward_closure_holds(const MonomialIdeal& a, const Vec& t, const GradingSpec& g) {
  g.require_standard("upward_closure_holds");
  if (static_cast<int>(t.size()) != g.rank()) throw std::invalid_argument("rank mismatch");
  // clamp to the positive quadrant; degrees below zero carry no monomials
  Vec base(t.size());
  for (size_t i = 0; i < t.size(); ++i) base[i] = std::max<std::int64_t>(t[i], 0);
  // containment at the corner plus a small window; the corner decides, the
  // window exercises the product rule
  std::vector<Vec> degrees{base};
  for (int mask = 1; mask < (1 << g.rank()); ++mask) {
    for (int step = 1; step <= 2; ++step) {
      Vec d = base;
      for (int i = 0; i < g.rank(); ++i)
        if ((mask >> i) & 1) d[i] += step;
      degrees.push_back(d);
    }
  }
  for (const auto& d : degrees)
    for (const auto& e : g.monomials_of_degree(d))
      if (!a.contains(Monomial(e))) return false;
  return true;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& b) {
  std::vector<MonomialPrime> out = monomial_primes_over(b);
  // keep the inclusion-minimal covers
  std::vector<MonomialPrime> minimal;
  for (const auto& p : out) {
    bool is_min = true;
    for (const auto& q : out)
      if (q.vars.bits != p.vars.bits && q.vars.subset_of(p.vars)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(p);
  }
  return minimal;
}

std::vector<MonomialPrime> monomial_primes_over(const MonomialIdeal& b) {
  const int n = b.nvars();
  std::vector<MonomialPrime> out;
  if (b.is_unit()) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (const auto& g : b.gens())
      if ((g.support().bits & mask) == 0) {
        covers = false;
        break;
      }
    if (covers) out.push_back(MonomialPrime(n, Pattern{n, mask}));
  }
  return out;
}

}  // namespace mlc
