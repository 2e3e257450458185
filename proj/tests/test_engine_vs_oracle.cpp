#include "doctest.h"
#include "mlc/cohomology.hpp"
#include "mlc/oracle.hpp"

#include <random>

using namespace mlc;

namespace {

struct RandomInstance {
  GradingSpec grading;
  MonomialIdeal b;
  Pattern koszul_vars;
  GradedModule module;
};

RandomInstance random_instance(std::mt19937& rng, const FieldSpec& field) {
  std::uniform_int_distribution<int> nv(1, 3), rr(1, 3), gens(0, 3), summands(1, 2), expo(0, 3),
      shift(-2, 2), coin(0, 1);
  int n = nv(rng);
  int r = std::min(rr(rng), n);
  std::vector<std::string> names;
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) {
    names.push_back(std::string(1, static_cast<char>('x' + v)));
    colors[v] = v < r ? v + 1 : 1 + static_cast<int>(rng() % r);
  }
  GradingSpec g(names, colors, r, field);

  auto random_monomial = [&]() {
    Expo e(n);
    for (int v = 0; v < n; ++v) e[v] = expo(rng);
    return Monomial(e);
  };
  std::vector<Monomial> bg;
  for (int i = gens(rng); i > 0; --i) bg.push_back(random_monomial());
  MonomialIdeal b = MonomialIdeal::make(n, bg);

  Pattern kv = Pattern::empty(n);
  for (int v = 0; v < n; ++v)
    if (coin(rng)) kv.add(v);

  std::vector<Summand> pieces;
  for (int j = summands(rng); j > 0; --j) {
    std::vector<Monomial> ig;
    for (int i = gens(rng); i > 0; --i) ig.push_back(random_monomial());
    Expo sh(n);
    for (int v = 0; v < n; ++v) sh[v] = shift(rng);
    pieces.push_back(Summand{sh, MonomialIdeal::make(n, ig)});
  }
  return RandomInstance{g, b, kv, GradedModule(g, pieces)};
}

}  // namespace

TEST_CASE("cell engine equals the brute-force oracle on random instances") {
  std::mt19937 rng(20240817);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    FieldSpec field = trial % 5 == 4 ? FieldSpec::prime(trial % 10 == 9 ? 3 : 2) : FieldSpec::rationals();
    auto inst = random_instance(rng, field);
    if (inst.module.is_zero()) continue;
    const int n = inst.module.nvars();
    oracle::Window w(Vec(n, -6), Vec(n, 6));
    Pattern none = Pattern::empty(n);

    auto dc = DegreewiseComplex::cech(inst.b, inst.module);
    auto reference = oracle::windowed_cech(inst.b.gens(), inst.module, w, none);
    for (const auto& [a, dims] : reference) CHECK(dc.slice_dims(a) == dims);
    // and through the cell decomposition rather than fresh slices
    for (int i = 0; i <= dc.length(); ++i) {
      auto sup = global_support(dc, i);
      for (const auto& [a, dims] : reference) CHECK(sup.dim_at(a) == dims[i]);
    }

    auto ko = DegreewiseComplex::koszul(inst.koszul_vars, inst.module);
    auto kreference = oracle::windowed_koszul(inst.koszul_vars, inst.module, w, none);
    for (const auto& [a, dims] : kreference) CHECK(ko.slice_dims(a) == dims);
    for (int i = 0; i <= ko.length(); ++i) {
      auto sup = global_support(ko, i);
      for (const auto& [a, dims] : kreference) CHECK(sup.dim_at(a) == dims[i]);
    }
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("inverted-variable complexes also match the oracle") {
  std::mt19937 rng(555777);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = random_instance(rng, FieldSpec::rationals());
    if (inst.module.is_zero()) continue;
    const int n = inst.module.nvars();
    Pattern inv = Pattern::empty(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) inv.add(v);
    oracle::Window w(Vec(n, -5), Vec(n, 5));

    auto dc = DegreewiseComplex::cech(inst.b, inst.module, inv);
    auto reference = oracle::windowed_cech(inst.b.gens(), inst.module, w, inv);
    for (const auto& [a, dims] : reference) CHECK(dc.slice_dims(a) == dims);

    auto ko = DegreewiseComplex::koszul(inst.koszul_vars, inst.module, inv);
    auto kreference = oracle::windowed_koszul(inst.koszul_vars, inst.module, w, inv);
    for (const auto& [a, dims] : kreference) CHECK(ko.slice_dims(a) == dims);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("brute force maxima agree with the lattice layer on random sets") {
  std::mt19937 rng(31415);
  std::uniform_int_distribution<std::int64_t> coord(-9, 9);
  std::uniform_int_distribution<int> count(0, 50), dim(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    int d = dim(rng);
    std::vector<Vec> pts;
    for (int i = count(rng); i > 0; --i) {
      Vec p(d);
      for (int v = 0; v < d; ++v) p[v] = coord(rng);
      pts.push_back(p);
    }
    CHECK(maximal_elements(PointSet::of_points(d, pts)).points() == oracle::brute_force_max(pts));
  }
}
