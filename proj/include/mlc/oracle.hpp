#pragma once

#include <map>

#include "mlc/module.hpp"

namespace mlc {
namespace oracle {

// Closed fine-degree window.
struct Window {
  Vec lo, hi;

  Window(Vec lo_, Vec hi_);
  std::vector<Vec> points() const;
};

// Naive per-degree Cech cohomology of the ideal generated by gens on m,
// optionally after inverting base_inverted: explicit monomial bases for each
// localization, dense differentials, plain Gaussian elimination. Kept
// deliberately naive; it is the independent witness for the cell engine and
// must not be optimized.
std::map<Vec, std::vector<int>> windowed_cech(const std::vector<Monomial>& gens, const GradedModule& m,
                                              const Window& w, const Pattern& base_inverted);

// Same for the Koszul construction of Ext against S/(x_v : v in vars).
std::map<Vec, std::vector<int>> windowed_koszul(const Pattern& vars, const GradedModule& m,
                                                const Window& w, const Pattern& base_inverted);

// Exhaustive pairwise maximal elements of a finite point list.
std::vector<Vec> brute_force_max(const std::vector<Vec>& pts);

}  // namespace oracle
}  // namespace mlc
