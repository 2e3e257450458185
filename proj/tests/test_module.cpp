#include "doctest.h"
#include "mlc/module.hpp"
#include "mlc/oracle.hpp"

#include <random>

using namespace mlc;

namespace {

GradingSpec exy() { return GradingSpec({"x", "y"}, {1, 2}, 2); }

GradedModule free_module() { return GradedModule::free_rank_one(exy()); }

GradedModule quotient(std::vector<Monomial> gens) {
  return GradedModule(exy(), {Summand{{0, 0}, MonomialIdeal::make(2, std::move(gens))}});
}

Monomial mono(std::initializer_list<std::int64_t> e) { return Monomial(Expo(e)); }

}  // namespace

TEST_CASE("component basis") {
  CHECK(component_basis(free_module(), {2, 1}) == std::vector<int>{0});
  CHECK(component_basis(quotient({mono({1, 0})}), {1, 0}).empty());

  // S(-(1,0)) + S/(y) at degree (1,0): both alive
  GradedModule m(exy(), {Summand{{1, 0}, MonomialIdeal::zero(2)},
                         Summand{{0, 0}, MonomialIdeal::make(2, {mono({0, 1})})}});
  CHECK(component_basis(m, {1, 0}) == std::vector<int>{0, 1});
}

TEST_CASE("component dimensions are invariant under regrading on finite fibers") {
  GradedModule m(exy(), {Summand{{1, 2}, MonomialIdeal::make(2, {mono({2, 1})})},
                         Summand{{0, 0}, MonomialIdeal::make(2, {mono({0, 3})})}});
  auto sigma = Projection::from_matrix(2, {{1, 1}});
  GradedModule ms = regrade(m, sigma);
  CHECK(ms.grading().rank() == 1);
  // fiber of total degree h inside the window must carry the same dimensions
  for (std::int64_t h = -2; h <= 6; ++h) {
    int direct = 0, through = 0;
    for (std::int64_t a = -8; a <= 8; ++a) {
      std::int64_t b = h - a;
      if (b < -8 || b > 8) continue;
      direct += static_cast<int>(component_basis(m, {a, b}).size());
      through += static_cast<int>(component_basis(ms, {a, b}).size());
    }
    CHECK(direct == through);
  }
}

TEST_CASE("shift contract") {
  std::mt19937 rng(1212);
  std::uniform_int_distribution<std::int64_t> e(0, 2), sv(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    GradedModule m(exy(), {Summand{{sv(rng), sv(rng)}, MonomialIdeal::make(2, {mono({e(rng), e(rng)})})}});
    Expo w{sv(rng), sv(rng)};
    GradedModule shifted = m.shifted(w);
    for (const auto& a : oracle::Window({-4, -4}, {4, 4}).points())
      CHECK(component_basis(shifted, a).size() == component_basis(m, vec_add(a, w)).size());
  }
}

TEST_CASE("bounding shift for a cyclic torsion module") {
  // S/(x) with direction (1,0): u = 1, generator box at the origin
  auto m = quotient({mono({1, 0})});
  QDomain x = bounding_shift(m, {1, 0});
  CHECK(x.s == Vec{0, 0});
  CHECK(x.t == Vec{1, 0});
  for (const auto& a : oracle::Window({-2, -2}, {3, 3}).points()) {
    if (!component_basis(m, a).empty()) {
      Vec coarse = m.grading().coarse_degree(a);
      CHECK(x.contains(coarse));
      CHECK(vec_leq(x.s, coarse));
      CHECK(!vec_leq(x.t, coarse));
    }
  }
}

TEST_CASE("bounding shift edge cases") {
  CHECK(bounding_shift(GradedModule::zero(exy()), {1, 0}).is_empty_set());
  CHECK_THROWS_WITH_AS(bounding_shift(free_module(), {1, 0}), doctest::Contains("witness monomial"),
                       std::invalid_argument);
}

TEST_CASE("bounding shift covers the support on random annihilated modules") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<std::int64_t> e(1, 3), sv(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    // ideals containing a power of x so that the direction (1,0) is nilpotent
    std::vector<Monomial> gens{mono({e(rng), 0})};
    if (trial % 2) gens.push_back(mono({e(rng), e(rng)}));
    GradedModule m(exy(), {Summand{{sv(rng), sv(rng)}, MonomialIdeal::make(2, gens)}});
    QDomain x = bounding_shift(m, {1, 0});
    for (const auto& a : oracle::Window({-5, -5}, {6, 6}).points())
      if (!component_basis(m, a).empty()) {
        Vec coarse = m.grading().coarse_degree(a);
        CHECK(vec_leq(x.s, coarse));
        CHECK(!vec_leq(x.t, coarse));
      }
  }
}

TEST_CASE("regrade keeps module data") {
  auto m = quotient({mono({1, 0})});
  auto idm = regrade(m, Projection::identity(2));
  CHECK(idm.summands().size() == m.summands().size());
  CHECK(idm.grading() == m.grading());

  auto pi = Projection::keep(2, Pattern::of(2, {2}));
  auto mpi = regrade(m, pi);
  CHECK(mpi.grading().rank() == 1);
  CHECK(mpi.grading().color(0) == 0);
}
