#include "doctest.h"
#include "mlc/lattice.hpp"
#include "mlc/oracle.hpp"

#include <random>

using namespace mlc;

namespace {

std::vector<Vec> window_points(const Vec& lo, const Vec& hi) {
  return oracle::Window(lo, hi).points();
}

// membership-based reference for region maximal elements on a window,
// plus a check that nothing above the window dominates
std::vector<Vec> windowed_region_max(const Region& r, const Vec& lo, const Vec& hi) {
  std::vector<Vec> members;
  for (const auto& p : window_points(lo, hi))
    if (r.contains(p)) members.push_back(p);
  return oracle::brute_force_max(members);
}

}  // namespace

TEST_CASE("maximal elements of finite lists") {
  auto s = PointSet::of_points(2, {{1, 2}, {2, 1}, {0, 0}});
  auto m = maximal_elements(s);
  CHECK(m.points() == std::vector<Vec>{{1, 2}, {2, 1}});

  CHECK(maximal_elements(PointSet::of_points(2, {})).points().empty());
}

TEST_CASE("maximal elements of an unbounded half strip is empty") {
  // {(a,b): a < 0, b >= 0}
  Region r = Region::empty(2);
  Box b;
  b.iv = {Interval::at_most(-1), Interval::at_least(0)};
  r.add(b);
  CHECK(maximal_elements(PointSet::of_region(r)).points().empty());
}

TEST_CASE("maximal elements of a punctured lower quadrant") {
  // {n <= (0,0)} minus {(0,0)} -> {(0,-1), (-1,0)}
  Region quadrant = Region::empty(2);
  Box q;
  q.iv = {Interval::at_most(0), Interval::at_most(0)};
  quadrant.add(q);
  Region punct = region_subtract(quadrant, [] {
    Region p = Region::empty(2);
    p.add(box_point({0, 0}));
    return p;
  }());
  auto m = maximal_elements(PointSet::of_region(punct));
  CHECK(m.points() == std::vector<Vec>{{-1, 0}, {0, -1}});
  // brute force agreement on a window plus unboundedness sanity
  CHECK(windowed_region_max(punct, {-3, -3}, {0, 0}) == m.points());
}

TEST_CASE("domination") {
  CHECK(dominates(PointSet::of_points(2, {}), PointSet::of_points(2, {{0, 0}})));
  CHECK(!dominates(PointSet::of_points(2, {{0, 0}}), PointSet::of_points(2, {{1, -1}})));
  // open lower quadrant dominated by a single point
  Region r = Region::empty(2);
  Box b;
  b.iv = {Interval::at_most(-1), Interval::at_most(-1)};
  r.add(b);
  CHECK(dominates(PointSet::of_region(r), PointSet::of_points(2, {{-1, -1}})));
  CHECK(!dominates(PointSet::of_region(r), PointSet::of_points(2, {{-2, -5}})));
}

TEST_CASE("domination symmetry gives equal maxima") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coord(-4, 4), count(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> a, b;
    for (int i = count(rng); i > 0; --i) a.push_back({coord(rng), coord(rng)});
    for (int i = count(rng); i > 0; --i) b.push_back({coord(rng), coord(rng)});
    auto sa = PointSet::of_points(2, a), sb = PointSet::of_points(2, b);
    if (dominates(sa, sb) && dominates(sb, sa))
      CHECK(maximal_elements(sa).points() == maximal_elements(sb).points());
  }
}

TEST_CASE("qdomain membership follows the strip rule") {
  QDomain x({-2, 1}, {0, 2}, Pattern::of(2, {1, 2}));
  CHECK(qdomain_contains(x, {-1, 5}));
  CHECK(!qdomain_contains(x, {3, 0}));
  CHECK(!qdomain_contains(QDomain({1, 1}, {1, 1}, Pattern::empty(2)), {1, 1}));

  // figure-style check: column strip a in [-2,-1], row strip b = 1
  for (std::int64_t a = -5; a <= 4; ++a)
    for (std::int64_t b = -5; b <= 4; ++b) {
      bool expect = (a == -2 || a == -1) || (b == 1);
      CHECK(qdomain_contains(x, {a, b}) == expect);
    }
}

TEST_CASE("translation off the pattern does not change a qdomain") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3), width(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vec s{coord(rng), coord(rng), coord(rng)};
    Vec t = s;
    t[0] += width(rng);
    t[2] += width(rng);
    Pattern q = Pattern::of(3, {1, 3});
    QDomain x(s, t, q);
    Vec w{0, coord(rng), 0};  // support disjoint from q
    QDomain shifted(vec_add(s, w), vec_add(t, w), q);
    for (const auto& n : window_points({-4, -4, -4}, {4, 4, 4}))
      CHECK(x.contains(n) == shifted.contains(n));
  }
}

TEST_CASE("qdomain cover contains its inputs") {
  QDomain a({0, 0}, {1, 0}, Pattern::of(2, {1}));
  QDomain b({2, 0}, {3, 0}, Pattern::of(2, {1}));
  QDomain cov = qdomain_cover({a, b}, Pattern::of(2, {1}));
  CHECK(cov.s == Vec{0, 0});
  CHECK(cov.t == Vec{3, 0});
  for (const auto& n : window_points({-1, -2}, {4, 2})) {
    if (a.contains(n) || b.contains(n)) CHECK(cov.contains(n));
  }

  // singleton cover keeps membership exactly
  QDomain single = qdomain_cover({a}, Pattern::of(2, {1}));
  for (const auto& n : window_points({-2, -2}, {3, 3})) CHECK(single.contains(n) == a.contains(n));

  // empty cover is the empty domain
  CHECK(qdomain_cover({}, Pattern::of(2, {1, 2})).is_empty_set());

  CHECK_THROWS(qdomain_cover({QDomain({0, 0}, {0, 2}, Pattern::of(2, {2}))}, Pattern::of(2, {1})));
}

TEST_CASE("random qdomain covers contain every input pointwise") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3), width(0, 4);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Pattern q = Pattern::of(2, {1, 2});
    std::vector<QDomain> xs;
    for (int i = count(rng); i > 0; --i) {
      Vec s{coord(rng), coord(rng)};
      Vec t{s[0] + width(rng), s[1] + width(rng)};
      xs.emplace_back(s, t, q);
    }
    QDomain cov = qdomain_cover(xs, q);
    for (const auto& n : window_points({-6, -6}, {6, 6}))
      for (const auto& x : xs)
        if (x.contains(n)) CHECK(cov.contains(n));
  }
}

TEST_CASE("escape multiplier clears the domain in few hops") {
  QDomain x({0, 0}, {2, 0}, Pattern::of(2, {1}));
  CHECK(escape_multiplier(x, {1, 0}) == 2);
  CHECK(escape_multiplier(QDomain({1, 1}, {1, 1}, Pattern::empty(2)), {1, 1}) == 1);
  CHECK(escape_multiplier(QDomain({0, 1}, {1, 3}, Pattern::of(2, {1, 2})), {1, 2}) == 1);
  CHECK_THROWS(escape_multiplier(x, {0, 0}));

  std::mt19937 rng(9001);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3), width(0, 4), mval(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Vec m{mval(rng), mval(rng)};
    if (m[0] == 0 && m[1] == 0) m[0] = 1;
    Pattern pm = Pattern::support(m);
    Vec s{coord(rng), coord(rng)}, t = s;
    for (int i : pm.indices()) t[i] += width(rng);
    QDomain x2(s, t, pm);
    std::int64_t u = escape_multiplier(x2, m);
    for (const auto& w : window_points({-5, -5}, {5, 5})) {
      bool escaped = false;
      for (int j = 0; j <= pm.count(); ++j)
        if (!x2.contains(vec_add(w, vec_scale(j * u, m)))) {
          escaped = true;
          break;
        }
      CHECK(escaped);
    }
  }
}

TEST_CASE("projection selection, matrices and composition") {
  Projection keep1 = Projection::keep(2, Pattern::of(2, {1}));
  CHECK(keep1.apply({-1, 7}) == Vec{-1});

  Projection sigma = Projection::from_matrix(2, {{1, 1}});
  CHECK(sigma.apply({2, 3}) == Vec{5});

  Projection phi_p = Projection::keep(2, Pattern::of(2, {1, 2}));
  Projection rel = Projection::relative(Pattern::of(2, {1, 2}), Pattern::of(2, {1}));
  Projection composed = compose_projection(rel, phi_p);
  CHECK(composed.apply({4, -2}) == Vec{4});
  CHECK(rel.apply(phi_p.apply({4, -2})) == Vec{4});

  CHECK_THROWS(Projection::relative(Pattern::of(3, {1}), Pattern::of(3, {1, 2})));
  CHECK_THROWS(Projection::from_matrix(2, {{1, -1}}));
}

TEST_CASE("region algebra against pointwise reference") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4);
  std::uniform_int_distribution<int> boxes(1, 3), kind(0, 3);
  auto random_region = [&]() {
    Region r = Region::empty(2);
    for (int i = boxes(rng); i > 0; --i) {
      Box b;
      for (int v = 0; v < 2; ++v) {
        std::int64_t a = coord(rng), c = coord(rng);
        if (a > c) std::swap(a, c);
        switch (kind(rng)) {
          case 0: b.iv.push_back(Interval::closed(a, c)); break;
          case 1: b.iv.push_back(Interval::at_most(c)); break;
          case 2: b.iv.push_back(Interval::at_least(a)); break;
          default: b.iv.push_back(Interval::all()); break;
        }
      }
      r.add(b);
    }
    return r;
  };
  for (int trial = 0; trial < 150; ++trial) {
    Region a = random_region(), b = random_region();
    Region diff = region_subtract(a, b), meet = region_intersect(a, b);
    for (const auto& p : window_points({-6, -6}, {6, 6})) {
      CHECK(diff.contains(p) == (a.contains(p) && !b.contains(p)));
      CHECK(meet.contains(p) == (a.contains(p) && b.contains(p)));
    }
    // subtraction from a single box yields disjoint pieces
    if (!a.boxes.empty()) {
      Region single = Region::empty(2);
      single.add(a.boxes[0]);
      Region sdiff = region_subtract(single, b);
      for (size_t i = 0; i < sdiff.boxes.size(); ++i)
        for (size_t j = i + 1; j < sdiff.boxes.size(); ++j)
          CHECK(!box_intersect(sdiff.boxes[i], sdiff.boxes[j]));
    }
  }
}

TEST_CASE("region maximal elements match brute force on random regions") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4);
  std::uniform_int_distribution<int> boxes(1, 3), kind(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Region r = Region::empty(2);
    bool bounded = true;
    for (int i = boxes(rng); i > 0; --i) {
      Box b;
      for (int v = 0; v < 2; ++v) {
        std::int64_t a = coord(rng), c = coord(rng);
        if (a > c) std::swap(a, c);
        int k = kind(rng);
        if (k == 0) {
          b.iv.push_back(Interval::closed(a, c));
        } else if (k == 1) {
          b.iv.push_back(Interval::at_most(c));
        } else {
          b.iv.push_back(Interval::at_least(a));
          bounded = false;
        }
      }
      r.add(b);
    }
    auto got = maximal_elements(PointSet::of_region(r)).points();
    if (bounded) {
      // every member is inside the window once it is wide enough
      auto expect = windowed_region_max(r, {-10, -10}, {6, 6});
      CHECK(got == expect);
    } else {
      for (const auto& p : got) {
        CHECK(r.contains(p));
        // nothing nearby strictly dominates a reported maximal element
        for (const auto& q : window_points(vec_sub(p, {0, 0}), vec_add(p, {3, 3})))
          if (q != p && r.contains(q)) CHECK(!vec_leq(p, q));
      }
    }
  }
}
