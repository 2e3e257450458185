#include "doctest.h"
#include "mlc/exactlin.hpp"

#include <random>

using namespace mlc;

namespace {

IntMat from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return m;
}

// reference rank over Q by plain fraction elimination
int naive_rank(std::vector<std::vector<Frac>> m) {
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
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Frac f = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank handles simple shapes") {
  CHECK(rank(from_rows({{1, 0}, {0, 1}}), FieldSpec::rationals()) == 2);
  CHECK(rank(from_rows({{1, 1}, {1, 1}}), FieldSpec::rationals()) == 1);
  CHECK(rank(from_rows({{0, 0}, {0, 0}}), FieldSpec::rationals()) == 0);
  CHECK(rank(IntMat(0, 3), FieldSpec::rationals()) == 0);
  CHECK(rank(IntMat(3, 0), FieldSpec::rationals()) == 0);
}

TEST_CASE("rank matches naive elimination on random small sign matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 8), entry(-1, 1);
  for (int trial = 0; trial < 500; ++trial) {
    int r = dim(rng), c = dim(rng);
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    std::vector<std::vector<Frac>> frows(r, std::vector<Frac>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        rows[i][j] = entry(rng);
        frows[i][j] = Frac(rows[i][j]);
      }
    CHECK(rank(from_rows(rows), FieldSpec::rationals()) == naive_rank(frows));
  }
}

TEST_CASE("rank over a prime field differs where it should") {
  // multiplication by 2 is invertible over Q and F3 but zero over F2
  IntMat m = from_rows({{2}});
  CHECK(rank(m, FieldSpec::rationals()) == 1);
  CHECK(rank(m, FieldSpec::prime(3)) == 1);
  CHECK(rank(m, FieldSpec::prime(2)) == 0);
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 7), entry(-1, 1);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int trial = 0; trial < 300; ++trial) {
      int r = dim(rng), c = dim(rng);
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) rows[i][j] = entry(rng);
      IntMat m = from_rows(rows);
      auto basis = kernel_basis(m, field);
      CHECK(static_cast<int>(basis.size()) == c - rank(m, field));
      for (const auto& v : basis) {
        for (int i = 0; i < r; ++i) {
          std::int64_t s = 0;
          for (int j = 0; j < c; ++j) s += rows[i][j] * v[j];
          if (field.kind == FieldSpec::Kind::Prime)
            CHECK(s % field.p == 0);
          else
            CHECK(s == 0);
        }
      }
    }
  }
}

TEST_CASE("induced map vanishing detects image containment") {
  // complex 0 -> k^2 --d--> k, phi identity into a target whose d' hits one axis
  IntMat d_src = from_rows({{1, 1}});         // kernel = span{(1,-1)}
  IntMat phi = from_rows({{1, 0}, {0, 1}});   // identity
  IntMat d_prev_hit = from_rows({{1}, {-1}});  // image contains (1,-1)
  IntMat d_prev_miss = from_rows({{1}, {1}});
  CHECK(induced_map_is_zero(d_src, d_prev_hit, phi, FieldSpec::rationals()));
  CHECK(!induced_map_is_zero(d_src, d_prev_miss, phi, FieldSpec::rationals()));
}
