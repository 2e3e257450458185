#include "doctest.h"
#include "mlc/invariants.hpp"
#include "mlc/oracle.hpp"

#include <random>

using namespace mlc;

namespace {

GradingSpec exy() { return GradingSpec({"x", "y"}, {1, 2}, 2); }
GradingSpec exy1() { return GradingSpec({"x", "y"}, {1, 1}, 1); }

Monomial mono(std::initializer_list<std::int64_t> e) { return Monomial(Expo(e)); }
MonomialIdeal ideal(int n, std::vector<Monomial> gens) { return MonomialIdeal::make(n, std::move(gens)); }

GradedModule sfree(const GradingSpec& g) { return GradedModule::free_rank_one(g); }
GradedModule quot(const GradingSpec& g, std::vector<Monomial> gens) {
  return GradedModule(g, {Summand{Expo(g.nvars(), 0), ideal(g.nvars(), std::move(gens))}});
}

}  // namespace

TEST_CASE("anchor points of coordinate primes on the free module") {
  auto g = exy();
  auto S = sfree(g);
  MonomialPrime pxy(2, Pattern::of(2, {1, 2}));
  auto a2 = anchor_points(pxy, S, 2);
  CHECK(a2.points == std::vector<Vec>{{-1, -1}});
  CHECK(anchor_points(pxy, S, 0).points.empty());
  CHECK(anchor_points(pxy, S, 1).points.empty());

  MonomialPrime px(2, Pattern::of(2, {1}));
  auto a1 = anchor_points(px, S, 1);
  CHECK(a1.dirs == Pattern::of(2, {1}));
  CHECK(a1.points == std::vector<Vec>{{-1}});
  CHECK(anchor_points(px, S, 0).points.empty());

  MonomialPrime pempty(2, Pattern::empty(2));
  CHECK_THROWS(anchor_points(pempty, S, 0));
}

TEST_CASE("anchor points agree with the regraded computation") {
  std::mt19937 rng(642);
  std::uniform_int_distribution<std::int64_t> e(0, 2), sv(-2, 2);
  auto g = exy();
  for (int trial = 0; trial < 30; ++trial) {
    GradedModule m(g, {Summand{{sv(rng), sv(rng)}, ideal(2, {mono({e(rng), e(rng)})})},
                       Summand{{sv(rng), sv(rng)}, MonomialIdeal::zero(2)}});
    for (auto vars : {Pattern::of(2, {1}), Pattern::of(2, {2}), Pattern::of(2, {1, 2})}) {
      MonomialPrime p(2, vars);
      if (directions(p, g).is_empty()) continue;
      auto rep = check_anchor_regrade("rnd", p, m);
      CHECK(rep.passed());
    }
  }
}

TEST_CASE("bass numbers in the *maximal case") {
  auto g = exy();
  MonomialPrime pxy(2, Pattern::of(2, {1, 2}));
  CHECK(bass_number(pxy, sfree(g), 2) == 1);
  CHECK(bass_number(pxy, sfree(g), 0) == 0);
  CHECK(bass_number(pxy, quot(g, {mono({1, 0})}), 1) == 1);
  CHECK_THROWS(bass_number(MonomialPrime(2, Pattern::of(2, {1})), sfree(g), 1));
}

TEST_CASE("bass numbers count anchor points with multiplicity one on the plane") {
  // Koszul self-duality on the free module: mu^2 concentrated at (-1,-1)
  auto g = exy();
  MonomialPrime pxy(2, Pattern::of(2, {1, 2}));
  auto a = anchor_points(pxy, sfree(g), 2);
  CHECK(static_cast<std::int64_t>(a.points.size()) == bass_number(pxy, sfree(g), 2));
}

TEST_CASE("ends of localized cohomology") {
  auto g = exy();
  auto S = sfree(g);
  auto ex = end_of(ideal(2, {mono({1, 0})}), S, 1);
  CHECK(ex.dirs == Pattern::of(2, {1}));
  CHECK(ex.points == std::vector<Vec>{{-1}});

  auto exy2 = end_of(ideal(2, {mono({1, 0}), mono({0, 1})}), S, 2);
  CHECK(exy2.points == std::vector<Vec>{{-1, -1}});

  CHECK(end_of(ideal(2, {mono({1, 0}), mono({0, 1})}), S, 1).points.empty());
  CHECK_THROWS(end_of(ideal(2, {mono({1, 1})}), S, 1));  // dir empty
}

TEST_CASE("ends dominate every projected supporting degree") {
  std::mt19937 rng(8383);
  std::uniform_int_distribution<std::int64_t> e(0, 2), sv(-2, 2);
  auto g = exy();
  for (int trial = 0; trial < 40; ++trial) {
    GradedModule m(g, {Summand{{sv(rng), sv(rng)}, ideal(2, {mono({e(rng), e(rng)})})}});
    if (m.is_zero()) continue;
    MonomialIdeal b = trial % 2 ? ideal(2, {mono({1, 0})}) : ideal(2, {mono({1, 0}), mono({0, 1})});
    Pattern dirs = directions(b, g);
    auto dc = DegreewiseComplex::cech(b, m);
    for (int j = 0; j <= dc.length(); ++j) {
      auto e2 = end_of(b, m, j);
      auto sup = global_support(dc, j);
      Projection keep = Projection::keep(g.rank(), dirs);
      for (const auto& a : oracle::Window(Vec(2, -5), Vec(2, 5)).points())
        if (sup.dim_at(a) > 0) {
          Vec proj = keep.apply(g.coarse_degree(a));
          CHECK(dominates(PointSet::of_points(dirs.count(), {proj}),
                          PointSet::of_points(dirs.count(), e2.points)));
        }
    }
  }
}

TEST_CASE("q bounds") {
  auto g = exy();
  auto S = sfree(g);
  CHECK(q_bound(S, Pattern::of(2, {1, 2})) == std::vector<Vec>{{-1, -1}});
  CHECK(q_bound(S, Pattern::of(2, {1})) == std::vector<Vec>{{-1}});
  CHECK(q_bound(GradedModule::zero(g), Pattern::of(2, {1})).empty());
  CHECK_THROWS(q_bound(S, Pattern::empty(2)));
}

TEST_CASE("finiteness dimension g on the running example") {
  auto g = exy();
  auto m = quot(g, {mono({1, 0})});  // S/(x)
  MonomialIdeal by = ideal(2, {mono({0, 1})});

  auto g2 = finiteness_dimension_g(by, m, Pattern::of(2, {2}));
  CHECK(g2.value == 1);
  CHECK(g2.escape_box.has_value());

  auto g1 = finiteness_dimension_g(by, m, Pattern::of(2, {1}));
  CHECK(!g1.value.has_value());  // infinite
  CHECK(g1.witnesses.size() == 2u);

  // empty pattern: grade
  auto S = sfree(g);
  MonomialIdeal bxy = ideal(2, {mono({1, 0}), mono({0, 1})});
  CHECK(finiteness_dimension_g(bxy, S, Pattern::empty(2)).value == 2);
}

TEST_CASE("finiteness dimension f mirrors the g values") {
  auto g = exy();
  auto m = quot(g, {mono({1, 0})});
  MonomialIdeal by = ideal(2, {mono({0, 1})});

  CHECK(!finiteness_dimension_f(ideal(2, {mono({1, 0})}), by, m).has_value());
  CHECK(finiteness_dimension_f(by, by, m) == 1);
  // unit ideal computes the grade
  auto S = sfree(g);
  MonomialIdeal bxy = ideal(2, {mono({1, 0}), mono({0, 1})});
  CHECK(finiteness_dimension_f(MonomialIdeal::unit(2), bxy, S) == 2);
  // zero ideal lies in every radical annihilator
  CHECK(!finiteness_dimension_f(MonomialIdeal::zero(2), bxy, S).has_value());
}

TEST_CASE("g is invariant under shifts") {
  std::mt19937 rng(99881);
  std::uniform_int_distribution<std::int64_t> e(0, 2), sv(-2, 2);
  auto g = exy();
  for (int trial = 0; trial < 25; ++trial) {
    GradedModule m(g, {Summand{{sv(rng), sv(rng)}, ideal(2, {mono({e(rng), e(rng)})})}});
    MonomialIdeal b = trial % 2 ? ideal(2, {mono({0, 1})}) : ideal(2, {mono({1, 0}), mono({0, 1})});
    Expo w{sv(rng), sv(rng)};
    for (auto q : {Pattern::empty(2), Pattern::of(2, {1}), Pattern::of(2, {2}), Pattern::of(2, {1, 2})})
      CHECK(finiteness_dimension_g(b, m, q).value == finiteness_dimension_g(b, m.shifted(w), q).value);
  }
}

TEST_CASE("kunneth supports reproduce the four tensor diagrams") {
  // both factors supported in {0} at the inner indices and on the negatives at the top
  auto interval_region = [](Interval iv) {
    Region r = Region::empty(1);
    Box b;
    b.iv = {iv};
    r.add(b);
    return r;
  };
  std::map<int, Region> sa, sb;
  sa[2] = interval_region(Interval::point(0));
  sa[5] = interval_region(Interval::at_most(-1));
  sb[3] = interval_region(Interval::point(0));
  sb[5] = interval_region(Interval::at_most(-1));
  Region base = interval_region(Interval::at_least(0));

  auto window = oracle::Window({-5, -5}, {4, 4}).points();
  auto members = [&](const Region& r) {
    std::vector<Vec> out;
    for (const auto& p : window)
      if (r.contains(p)) out.push_back(p);
    return out;
  };

  Region h2 = kunneth_support(sa, sb, base, base, 2);
  std::vector<Vec> expect2;
  for (std::int64_t y = 0; y <= 4; ++y) expect2.push_back({0, y});
  CHECK(members(h2) == expect2);

  Region h3 = kunneth_support(sa, sb, base, base, 3);
  std::vector<Vec> expect3;
  for (std::int64_t x = 0; x <= 4; ++x) expect3.push_back({x, 0});
  std::sort(expect3.begin(), expect3.end());
  CHECK(members(h3) == expect3);

  Region h4 = kunneth_support(sa, sb, base, base, 4);
  CHECK(members(h4) == std::vector<Vec>{{0, 0}});

  Region h5 = kunneth_support(sa, sb, base, base, 5);
  std::vector<Vec> expect5;
  for (const auto& p : window)
    if ((p[0] < 0 && p[1] >= 0) || (p[0] >= 0 && p[1] < 0)) expect5.push_back(p);
  CHECK(members(h5) == expect5);

  // beyond the top indices only the cross pair (2,5) survives
  Region h6 = kunneth_support(sa, sb, base, base, 6);
  std::vector<Vec> expect6;
  for (const auto& p : window)
    if (p[0] == 0 && p[1] < 0) expect6.push_back(p);
  CHECK(members(h6) == expect6);
  CHECK(kunneth_support(sa, sb, base, base, 12).is_empty());
}

TEST_CASE("theorem checkers pass on the plane instances") {
  auto g = exy();
  auto S = sfree(g);
  auto Sx = quot(g, {mono({1, 0})});
  MonomialIdeal bx = ideal(2, {mono({1, 0})});
  MonomialIdeal by = ideal(2, {mono({0, 1})});
  MonomialIdeal bxy = ideal(2, {mono({1, 0}), mono({0, 1})});

  MonomialPrime px(2, Pattern::of(2, {1}));
  MonomialPrime pxy(2, Pattern::of(2, {1, 2}));

  CHECK(check_anchor_lifting("t", px, pxy, S).passed());
  CHECK(check_anchor_extension("t", px, S).passed());
  for (const auto& b : {bx, bxy}) {
    CHECK(check_ends_vs_anchors("t", b, S, 2).passed());
    CHECK(check_ends_vs_anchors("t", b, Sx, 2).passed());
    CHECK(check_end_dominated("t", b, S).passed());
    CHECK(check_end_stabilization("t", b, S).passed());
    CHECK(check_maximal_reduction("t", b, Sx).passed());
  }

  std::optional<std::int64_t> corner;
  CHECK(check_vanishing_corner("t", bxy, S, &corner).passed());
  CHECK(corner.has_value());
  CHECK(*corner <= 0);

  CHECK(check_mixed_vanishing("t", bx, S).passed());
  CHECK(check_component_finiteness("t", S).passed());
  CHECK(check_component_finiteness("t", Sx).passed());

  CHECK(check_domain_annihilator("t", by, Sx, {1, 0}, 2).passed());
  CHECK(check_f_equals_g("t", by, Sx, {{0, 1}}).passed());
  CHECK(check_f_equals_g("t", by, Sx, {{1, 0}, {0, 1}}).passed());
  CHECK(check_grade_identity("t", bxy, S).passed());
  CHECK(check_grade_identity("t", by, Sx).passed());
  CHECK(check_finitely_graded_identity("t", by, Sx).passed());
  CHECK(check_finitely_graded_identity("t", bxy, S).passed());
}

TEST_CASE("report rendering is deterministic") {
  auto g = exy();
  auto S = sfree(g);
  MonomialIdeal bx = ideal(2, {mono({1, 0})});
  auto r1 = check_ends_vs_anchors("E", bx, S, 2).to_string();
  auto r2 = check_ends_vs_anchors("E", bx, S, 2).to_string();
  CHECK(r1 == r2);
  CHECK(r1.find("[ends-vs-anchors]") == 0);
}
