#pragma once

#include <memory>
#include <optional>

#include "mlc/module.hpp"

namespace mlc {

// Degreewise complex computing either Cech cohomology H^i_b(M) or Koszul
// Ext^i(S/p_V, M), optionally after inverting a base set of variables.
// All differentials preserve fine degree, so each degree slice is a finite
// complex of vector spaces with entries 0 or +-1; which slots are alive is a
// staircase predicate, constant on a finite grid of lattice boxes.
class DegreewiseComplex {
 public:
  enum class Kind { Cech, Koszul };

  static DegreewiseComplex cech(const MonomialIdeal& b, GradedModule m,
                                Pattern inverted_vars = Pattern{});
  static DegreewiseComplex koszul(const Pattern& vars, GradedModule m,
                                  Pattern inverted_vars = Pattern{});

  Kind kind() const { return m_kind; }
  const GradedModule& module() const { return m_module; }
  const GradingSpec& grading() const { return m_module.grading(); }
  int length() const { return m_length; }  // cohomology vanishes above this

  // Slot bookkeeping: slots are subsets of {0..length-1} as bitmasks.
  bool slot_alive(int summand, std::uint32_t slot, const Vec& a) const;
  std::uint32_t alive_mask(int summand, const Vec& a) const;

  // Exact dimensions of the degree-a slice, indices 0..length.
  std::vector<int> slice_dims(const Vec& a) const;

  // Per-coordinate thresholds where some alive predicate can change.
  std::vector<std::vector<std::int64_t>> thresholds(int summand) const;

  struct Cell {
    Box box;
    std::uint32_t alive;
    std::vector<int> dims;
  };
  // Disjoint cover of Z^nvars by constancy cells, per summand.
  const std::vector<std::vector<Cell>>& cells() const;

  // Differential at level t (rows: alive level-t+1 slots, cols: alive level-t
  // slots) for a given alive mask.
  IntMat differential(std::uint32_t alive, int t) const;

 private:
  Kind m_kind;
  std::vector<Monomial> m_gens;  // Cech generators
  Pattern m_vars;                // Koszul variables
  GradedModule m_module;
  Pattern m_inverted;
  int m_length = 0;
  mutable std::shared_ptr<std::vector<std::vector<Cell>>> m_cells;

  DegreewiseComplex() = default;
  Pattern slot_inverted(std::uint32_t slot) const;  // Cech: union of supports
};

// Fine support of the localization (S(-shift)/ideal)[x_F^{-1}] as disjoint boxes.
Region localization_support(const Summand& s, const Pattern& f);

// Fine support of H^i with per-cell dimensions (cells of different summands
// may overlap; dimensions add).
struct SupportRegion {
  int nvars = 0;
  std::vector<std::pair<Box, int>> cells;

  bool empty() const;
  Region as_region() const;
  int dim_at(const Vec& a) const;
  // Coarse images of the payload cells (dimension payload preserved).
  std::vector<std::pair<Box, int>> coarse_boxes(const GradingSpec& g) const;
};

SupportRegion global_support(const DegreewiseComplex& c, int i);

struct DimCount {
  bool infinite = false;
  std::int64_t value = 0;
  bool operator==(const DimCount&) const = default;
};

// Total dimension over the fine fiber of coarse degree n; INFINITE when a
// nonzero cell meets the fiber in infinitely many points.
DimCount component_dim(const DegreewiseComplex& c, int i, const Vec& n);

// Is z (given by its variable support) nilpotent on H^i? Exact: each payload
// cell must have a finite interval in some moving coordinate.
bool monomial_nilpotent(const DegreewiseComplex& c, int i, const Pattern& z_support);

// Multiplication by x^w on H^i is the zero map (checked on a refinement of
// the cell grid making both endpoints' patterns constant).
bool multiplication_is_zero(const DegreewiseComplex& c, int i, const Expo& w);

// Least u with R_{u m} * H^i = 0, nullopt when no power works; 0 when H^i = 0.
std::optional<std::int64_t> annihilation_exponent(const DegreewiseComplex& c, int i, const Vec& m);

}  // namespace mlc
