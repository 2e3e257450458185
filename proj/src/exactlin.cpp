#include "mlc/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace mlc {

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("prime field modulus must be >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("prime field modulus must be prime");
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::Rationals) return "Q";
  return "F" + std::to_string(p);
}

FieldSpec parse_field(const std::string& text) {
  if (text == "Q" || text == "QQ") return FieldSpec::rationals();
  if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
    std::int64_t p = 0;
    for (size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad field spec: " + text);
      p = p * 10 + (text[i] - '0');
    }
    return FieldSpec::prime(p);
  }
  throw std::invalid_argument("bad field spec: " + text);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

Frac::Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Frac operator+(const Frac& a, const Frac& b) {
  return Frac(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
}
Frac operator-(const Frac& a, const Frac& b) {
  return Frac(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
}
Frac operator*(const Frac& a, const Frac& b) { return Frac(checked_mul(a.num, b.num), checked_mul(a.den, b.den)); }
Frac operator/(const Frac& a, const Frac& b) {
  if (b.num == 0) throw std::domain_error("division by zero");
  return Frac(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

IntMat IntMat::hcat(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  IntMat r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible");
  return mod_norm(t, p);
}

// Fraction-free row echelon (Bareiss). Returns rank; on request records the
// echelon matrix and pivot columns for kernel extraction.
int bareiss_echelon(IntMat m, IntMat* echelon_out, std::vector<int>* pivot_cols_out) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_cols;
  std::int64_t prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        std::int64_t v = checked_add(checked_mul(m.at(r, c), m.at(i, j)), -checked_mul(m.at(i, c), m.at(r, j)));
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    pivot_cols.push_back(c);
    ++r;
  }
  if (echelon_out) *echelon_out = m;
  if (pivot_cols_out) *pivot_cols_out = pivot_cols;
  return r;
}

int rank_mod_p(IntMat m, std::int64_t p, IntMat* echelon_out, std::vector<int>* pivot_cols_out) {
  const int rows = m.rows(), cols = m.cols();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = mod_norm(m.at(i, j), p);
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    std::int64_t inv = mod_inv(m.at(r, c), p);
    for (int j = c; j < cols; ++j) m.at(r, j) = mod_norm(m.at(r, j) * inv % p, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      std::int64_t f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) = mod_norm(m.at(i, j) - f * m.at(r, j) % p, p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (echelon_out) *echelon_out = m;
  if (pivot_cols_out) *pivot_cols_out = pivot_cols;
  return r;
}

}  // namespace

int rank(const IntMat& m, const FieldSpec& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.kind == FieldSpec::Kind::Rationals) return bareiss_echelon(m, nullptr, nullptr);
  return rank_mod_p(m, field.p, nullptr, nullptr);
}

std::vector<std::vector<std::int64_t>> kernel_basis(const IntMat& m, const FieldSpec& field) {
  const int cols = m.cols();
  std::vector<std::vector<std::int64_t>> basis;
  if (cols == 0) return basis;
  if (m.rows() == 0) {
    for (int c = 0; c < cols; ++c) {
      std::vector<std::int64_t> v(cols, 0);
      v[c] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }

  if (field.kind == FieldSpec::Kind::Prime) {
    IntMat e;
    std::vector<int> piv;
    int r = rank_mod_p(m, field.p, &e, &piv);
    std::vector<int> pivot_of_col(cols, -1);
    for (int k = 0; k < r; ++k) pivot_of_col[piv[k]] = k;
    for (int c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0) continue;
      std::vector<std::int64_t> v(cols, 0);
      v[c] = 1;
      for (int k = 0; k < r; ++k) v[piv[k]] = mod_norm(-e.at(k, c), field.p);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Rationals: fraction-free echelon, then back-substitution over Frac with
  // denominators cleared at the end.
  IntMat e;
  std::vector<int> piv;
  int r = bareiss_echelon(m, &e, &piv);
  std::vector<int> pivot_of_col(cols, -1);
  for (int k = 0; k < r; ++k) pivot_of_col[piv[k]] = k;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Frac> x(cols, Frac(0));
    x[c] = Frac(1);
    for (int k = r - 1; k >= 0; --k) {
      Frac s(0);
      for (int j = piv[k] + 1; j < cols; ++j)
        if (!x[j].is_zero() && e.at(k, j) != 0) s = s + Frac(e.at(k, j)) * x[j];
      x[piv[k]] = Frac(0) - s / Frac(e.at(k, piv[k]));
    }
    std::int64_t lcm = 1;
    for (int j = 0; j < cols; ++j) lcm = checked_mul(lcm / std::gcd(lcm, x[j].den), x[j].den);
    std::vector<std::int64_t> v(cols, 0);
    for (int j = 0; j < cols; ++j) v[j] = checked_mul(x[j].num, lcm / x[j].den);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool induced_map_is_zero(const IntMat& d_src, const IntMat& d_tgt_prev, const IntMat& phi,
                         const FieldSpec& field) {
  if (phi.cols() == 0 || phi.rows() == 0) return true;
  auto ker = kernel_basis(d_src, field);
  if (ker.empty()) return true;
  IntMat imgs(phi.rows(), static_cast<int>(ker.size()));
  for (size_t k = 0; k < ker.size(); ++k)
    for (int i = 0; i < phi.rows(); ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < phi.cols(); ++j)
        if (phi.at(i, j) != 0 && ker[k][j] != 0) s = checked_add(s, checked_mul(phi.at(i, j), ker[k][j]));
      imgs.at(i, static_cast<int>(k)) = s;
    }
  int base = rank(d_tgt_prev, field);
  int aug = rank(IntMat::hcat(d_tgt_prev, imgs), field);
  return base == aug;
}

}  // namespace mlc
