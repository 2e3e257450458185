#include "mlc/module.hpp"

#include <algorithm>
#include <sstream>

namespace mlc {

GradedModule::GradedModule(GradingSpec grading, std::vector<Summand> summands)
    : m_grading(std::move(grading)) {
  for (auto& s : summands) {
    if (static_cast<int>(s.shift.size()) != m_grading.nvars() || s.ideal.nvars() != m_grading.nvars())
      throw std::invalid_argument("summand rank mismatch");
    if (!s.ideal.is_unit()) m_summands.push_back(std::move(s));
  }
}

GradedModule GradedModule::free_rank_one(GradingSpec grading) {
  int n = grading.nvars();
  return GradedModule(std::move(grading), {Summand{Expo(n, 0), MonomialIdeal::zero(n)}});
}

GradedModule GradedModule::with_grading(GradingSpec g) const {
  return GradedModule(std::move(g), m_summands);
}

GradedModule GradedModule::shifted(const Expo& w) const {
  if (static_cast<int>(w.size()) != nvars()) throw std::invalid_argument("rank mismatch");
  auto s = m_summands;
  for (auto& piece : s)
    for (int v = 0; v < nvars(); ++v) piece.shift[v] -= w[v];
  return GradedModule(m_grading, std::move(s));
}

std::string GradedModule::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t j = 0; j < m_summands.size(); ++j) {
    if (j) os << " + ";
    os << "S(-" << vec_to_string(m_summands[j].shift) << ")/" << m_summands[j].ideal.to_string(m_grading);
  }
  return os.str();
}

std::vector<int> component_basis(const GradedModule& m, const Vec& a) {
  if (static_cast<int>(a.size()) != m.nvars()) throw std::invalid_argument("rank mismatch");
  std::vector<int> out;
  for (size_t j = 0; j < m.summands().size(); ++j) {
    const auto& s = m.summands()[j];
    Expo c(m.nvars());
    bool nonneg = true;
    for (int v = 0; v < m.nvars(); ++v) {
      c[v] = a[v] - s.shift[v];
      if (c[v] < 0) nonneg = false;
    }
    if (nonneg && !s.ideal.contains(Monomial(c))) out.push_back(static_cast<int>(j));
  }
  return out;
}

GradedModule regrade(const GradedModule& m, const Projection& phi) {
  return m.with_grading(m.grading().regrade(phi));
}

std::optional<std::int64_t> annihilation_degree(const GradedModule& m, const Vec& mdir) {
  const auto& g = m.grading();
  if (static_cast<int>(mdir.size()) != g.rank()) throw std::invalid_argument("rank mismatch");
  if (m.is_zero()) return 1;
  // R_m nilpotent on every cyclic piece iff each monomial of degree m lies in
  // every radical; the least power is then bounded by nvars * max exponent.
  std::int64_t maxexp = 1;
  for (const auto& s : m.summands())
    for (const auto& gen : s.ideal.gens())
      for (auto e : gen.e) maxexp = std::max(maxexp, e);
  std::int64_t cap = std::max<std::int64_t>(1, maxexp * g.nvars());
  for (std::int64_t u = 1; u <= cap; ++u) {
    bool all_in = true;
    for (const auto& e : g.monomials_of_degree(vec_scale(u, mdir))) {
      Monomial z{e};
      for (const auto& s : m.summands())
        if (!s.ideal.contains(z)) {
          all_in = false;
          break;
        }
      if (!all_in) break;
    }
    if (all_in) return u;
  }
  return std::nullopt;
}

QDomain bounding_shift(const GradedModule& m, const Vec& mdir) {
  const auto& g = m.grading();
  g.require_standard("bounding_shift");
  if (static_cast<int>(mdir.size()) != g.rank()) throw std::invalid_argument("rank mismatch");
  bool nonzero = false;
  for (auto v : mdir) {
    if (v < 0) throw std::invalid_argument("bounding_shift: direction must be nonnegative");
    if (v > 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("bounding_shift: direction must be nonzero");
  if (m.is_zero()) return QDomain::empty_domain(g.rank());

  // hypothesis: every monomial of degree m is nilpotent on each piece
  for (const auto& e : g.monomials_of_degree(mdir)) {
    Monomial z{e};
    for (const auto& s : m.summands())
      if (!s.ideal.radical().contains(z))
        throw std::invalid_argument("bounding_shift: R_m does not act nilpotently; witness monomial " +
                                    z.to_string(g) + " of degree " + vec_to_string(mdir));
  }
  auto u_opt = annihilation_degree(m, mdir);
  if (!u_opt) throw std::logic_error("bounding_shift: annihilation degree search failed");
  std::int64_t u = *u_opt;

  // generator degree box in the coarse lattice
  Vec s = g.coarse_degree(m.summands()[0].shift);
  Vec w = s;
  for (const auto& piece : m.summands()) {
    Vec d = g.coarse_degree(piece.shift);
    for (int i = 0; i < g.rank(); ++i) {
      s[i] = std::min(s[i], d[i]);
      w[i] = std::max(w[i], d[i]);
    }
  }
  Vec t = s;
  Pattern pm = Pattern::support(mdir);
  for (int i : pm.indices()) t[i] = s[i] + (w[i] - s[i] + u * mdir[i]);
  return QDomain(std::move(s), std::move(t), pm);
}

}  // namespace mlc
