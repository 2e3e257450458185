#pragma once

#include "mlc/monomial.hpp"

namespace mlc {

// One shifted cyclic piece S(-shift)/ideal.
struct Summand {
  Expo shift;  // fine degree of the generator
  MonomialIdeal ideal;
};

// Finite direct sum of shifted cyclic monomial quotients.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(GradingSpec grading, std::vector<Summand> summands);

  static GradedModule zero(GradingSpec grading) { return GradedModule(std::move(grading), {}); }
  static GradedModule free_rank_one(GradingSpec grading);

  const GradingSpec& grading() const { return m_grading; }
  const std::vector<Summand>& summands() const { return m_summands; }
  bool is_zero() const { return m_summands.empty(); }
  int nvars() const { return m_grading.nvars(); }

  GradedModule with_grading(GradingSpec g) const;
  GradedModule shifted(const Expo& w) const;  // components move by w: (M(w))_a = M_{a+w}

  std::string to_string() const;

 private:
  GradingSpec m_grading;
  std::vector<Summand> m_summands;  // unit-ideal pieces dropped
};

// Indices of summands whose basis covers fine degree a.
std::vector<int> component_basis(const GradedModule& m, const Vec& a);

// Same module, coarse degrees read through phi.
GradedModule regrade(const GradedModule& m, const Projection& phi);

// Least u >= 1 with R_{u m} * M = 0, or nullopt.
std::optional<std::int64_t> annihilation_degree(const GradedModule& m, const Vec& mdir);

// The X(s,t) of the generator-box construction: requires R_m nilpotent on M;
// coarse support of M lands in (s+N^r) \ (t+N^r).
QDomain bounding_shift(const GradedModule& m, const Vec& mdir);

}  // namespace mlc
