#include "mlc/oracle.hpp"

#include <algorithm>

namespace mlc {
namespace oracle {

Window::Window(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw std::invalid_argument("window rank mismatch");
  if (!vec_leq(lo, hi)) throw std::invalid_argument("window requires lo <= hi");
}

std::vector<Vec> Window::points() const {
  std::vector<Vec> pts;
  Vec cur = lo;
  while (true) {
    pts.push_back(cur);
    size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (size_t j = 0; j < i; ++j) cur[j] = lo[j];
        break;
      }
    }
    if (i == cur.size()) break;
  }
  return pts;
}

namespace {

// stands on its own: divisibility against the generators with a set of
// coordinates discarded
bool monomial_dies(const std::vector<Monomial>& gens, const std::vector<std::int64_t>& c,
                   const std::vector<bool>& discarded) {
  for (const auto& g : gens) {
    bool divides = true;
    for (size_t v = 0; v < c.size(); ++v) {
      if (discarded[v]) continue;
      if (g.e[v] > c[v]) {
        divides = false;
        break;
      }
    }
    if (divides) return true;
  }
  return false;
}

int plain_rank_rationals(std::vector<std::vector<Frac>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Frac f = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int plain_rank_prime(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (auto& row : m)
    for (auto& v : row) {
      v %= p;
      if (v < 0) v += p;
    }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      // eliminate without normalizing the pivot
      std::int64_t num = m[r][c], den = m[rank][c];
      for (int j = c; j < cols; ++j) {
        std::int64_t v = (m[r][j] * den - m[rank][j] * num) % p;
        if (v < 0) v += p;
        m[r][j] = v;
      }
    }
    ++rank;
  }
  return rank;
}

int plain_rank(const std::vector<std::vector<std::int64_t>>& m, const FieldSpec& field) {
  if (m.empty() || m[0].empty()) return 0;
  if (field.kind == FieldSpec::Kind::Prime) return plain_rank_prime(m, field.p);
  std::vector<std::vector<Frac>> q(m.size(), std::vector<Frac>(m[0].size()));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[0].size(); ++c) q[r][c] = Frac(m[r][c]);
  return plain_rank_rationals(std::move(q));
}

struct SlotBasis {
  // per level: list of (slot mask, summand) pairs that carry a basis element
  std::vector<std::vector<std::pair<std::uint32_t, int>>> alive;
};

std::vector<int> dims_from_levels(const SlotBasis& basis, int length,
                                  const std::vector<std::vector<std::vector<std::int64_t>>>& mats,
                                  const FieldSpec& field) {
  std::vector<int> dims(length + 1, 0);
  std::vector<int> rk(length, 0);
  for (int t = 0; t < length; ++t) rk[t] = plain_rank(mats[t], field);
  for (int t = 0; t <= length; ++t) {
    int d = static_cast<int>(basis.alive[t].size());
    if (t < length) d -= rk[t];
    if (t > 0) d -= rk[t - 1];
    dims[t] = d;
  }
  return dims;
}

int insertion_sign(std::uint32_t mask, int p) {
  int below = 0;
  for (int k = 0; k < p; ++k)
    if ((mask >> k) & 1u) ++below;
  return below % 2 == 0 ? 1 : -1;
}

}  // namespace

std::map<Vec, std::vector<int>> windowed_cech(const std::vector<Monomial>& gens, const GradedModule& m,
                                              const Window& w, const Pattern& base_inverted) {
  const int n = m.nvars();
  const int s = static_cast<int>(gens.size());
  const FieldSpec& field = m.grading().field();
  std::vector<bool> base(n, false);
  for (int v = 0; v < n; ++v)
    if (base_inverted.rank == n && base_inverted.contains(v)) base[v] = true;

  // inverted coordinate sets per slot
  std::vector<std::vector<bool>> slot_inv(1u << s, base);
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask)
    for (int k = 0; k < s; ++k)
      if ((mask >> k) & 1u)
        for (int v = 0; v < n; ++v)
          if (gens[k].e[v] > 0) slot_inv[mask][v] = true;

  std::map<Vec, std::vector<int>> out;
  const std::vector<std::int64_t> no_extra(n, 0);
  for (const auto& a : w.points()) {
    SlotBasis basis;
    basis.alive.assign(s + 1, {});
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      int level = __builtin_popcount(mask);
      for (size_t j = 0; j < m.summands().size(); ++j) {
        const Summand& piece = m.summands()[j];
        std::vector<std::int64_t> c(n);
        bool ok = true;
        for (int v = 0; v < n; ++v) {
          c[v] = a[v] - piece.shift[v];
          if (!slot_inv[mask][v] && c[v] < 0) ok = false;
        }
        if (ok && !monomial_dies(piece.ideal.gens(), c, slot_inv[mask]))
          basis.alive[level].emplace_back(mask, static_cast<int>(j));
      }
    }
    std::vector<std::vector<std::vector<std::int64_t>>> mats(s);
    for (int t = 0; t < s; ++t) {
      const auto& src = basis.alive[t];
      const auto& tgt = basis.alive[t + 1];
      mats[t].assign(tgt.size(), std::vector<std::int64_t>(src.size(), 0));
      for (size_t col = 0; col < src.size(); ++col)
        for (size_t row = 0; row < tgt.size(); ++row) {
          if (src[col].second != tgt[row].second) continue;
          std::uint32_t diff = tgt[row].first ^ src[col].first;
          if ((tgt[row].first & src[col].first) != src[col].first || __builtin_popcount(diff) != 1)
            continue;
          int p = __builtin_ctz(diff);
          mats[t][row][col] = insertion_sign(src[col].first, p);
        }
    }
    out[a] = dims_from_levels(basis, s, mats, field);
  }
  return out;
}

std::map<Vec, std::vector<int>> windowed_koszul(const Pattern& vars, const GradedModule& m,
                                                const Window& w, const Pattern& base_inverted) {
  const int n = m.nvars();
  auto vlist = vars.indices();
  const int s = static_cast<int>(vlist.size());
  const FieldSpec& field = m.grading().field();
  std::vector<bool> base(n, false);
  for (int v = 0; v < n; ++v)
    if (base_inverted.rank == n && base_inverted.contains(v)) base[v] = true;

  std::map<Vec, std::vector<int>> out;
  for (const auto& a : w.points()) {
    SlotBasis basis;
    basis.alive.assign(s + 1, {});
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      std::vector<std::int64_t> extra(n, 0);
      for (int k = 0; k < s; ++k)
        if ((mask >> k) & 1u) extra[vlist[k]] += 1;
      int level = __builtin_popcount(mask);
      for (size_t j = 0; j < m.summands().size(); ++j) {
        const Summand& piece = m.summands()[j];
        std::vector<std::int64_t> c(n);
        bool ok = true;
        for (int v = 0; v < n; ++v) {
          c[v] = a[v] + extra[v] - piece.shift[v];
          if (!base[v] && c[v] < 0) ok = false;
        }
        if (ok && !monomial_dies(piece.ideal.gens(), c, base))
          basis.alive[level].emplace_back(mask, static_cast<int>(j));
      }
    }
    std::vector<std::vector<std::vector<std::int64_t>>> mats(s);
    for (int t = 0; t < s; ++t) {
      const auto& src = basis.alive[t];
      const auto& tgt = basis.alive[t + 1];
      mats[t].assign(tgt.size(), std::vector<std::int64_t>(src.size(), 0));
      for (size_t col = 0; col < src.size(); ++col)
        for (size_t row = 0; row < tgt.size(); ++row) {
          if (src[col].second != tgt[row].second) continue;
          std::uint32_t diff = tgt[row].first ^ src[col].first;
          if ((tgt[row].first & src[col].first) != src[col].first || __builtin_popcount(diff) != 1)
            continue;
          int p = __builtin_ctz(diff);
          mats[t][row][col] = insertion_sign(src[col].first, p);
        }
    }
    out[a] = dims_from_levels(basis, s, mats, field);
  }
  return out;
}

std::vector<Vec> brute_force_max(const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (p == q) continue;
      bool leq = true;
      for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > q[i]) {
          leq = false;
          break;
        }
      if (leq) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle
}  // namespace mlc
