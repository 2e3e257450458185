#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlc {

// Coefficient field of an instance: exact rationals or a prime field.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p);
  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

FieldSpec parse_field(const std::string& text);

// Reduced fraction on 64-bit integers with overflow checks.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n) : num(n), den(1) {}
  Frac(std::int64_t n, std::int64_t d);

  bool is_zero() const { return num == 0; }
  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b);
  friend Frac operator*(const Frac& a, const Frac& b);
  friend Frac operator/(const Frac& a, const Frac& b);
  bool operator==(const Frac&) const = default;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// Dense integer matrix, row major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : m_rows(rows), m_cols(cols), m_a(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }
  std::int64_t& at(int r, int c) { return m_a[static_cast<size_t>(r) * m_cols + c]; }
  std::int64_t at(int r, int c) const { return m_a[static_cast<size_t>(r) * m_cols + c]; }

  // Horizontal concatenation [A | B]; row counts must match.
  static IntMat hcat(const IntMat& a, const IntMat& b);

 private:
  int m_rows = 0;
  int m_cols = 0;
  std::vector<std::int64_t> m_a;
};

// Rank over the given field. Rationals use fraction-free (Bareiss) elimination;
// prime fields reduce mod p and eliminate in place.
int rank(const IntMat& m, const FieldSpec& field);

// Basis of the right kernel {x : M x = 0}, as integer vectors (cleared
// denominators over the rationals; representatives in [0,p) mod p).
std::vector<std::vector<std::int64_t>> kernel_basis(const IntMat& m, const FieldSpec& field);

// True when phi maps ker(d_src) into im(d_tgt_prev), i.e. the map induced by
// the chain map phi on cohomology at this index is zero.
bool induced_map_is_zero(const IntMat& d_src, const IntMat& d_tgt_prev, const IntMat& phi,
                         const FieldSpec& field);

}  // namespace mlc
