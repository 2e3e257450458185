#include "mlc/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace mlc {

namespace {

Pattern complement(const Pattern& p) {
  Pattern out{p.rank, 0};
  for (int i = 0; i < p.rank; ++i)
    if (!p.contains(i)) out.add(i);
  return out;
}

std::vector<Vec> max_points(std::vector<Vec> pts, int dim) {
  return maximal_elements(PointSet::of_points(dim, std::move(pts))).points();
}

std::string points_to_string(const std::vector<Vec>& pts) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ",";
    os << vec_to_string(pts[i]);
  }
  os << "}";
  return os.str();
}

// Projected coarse boxes of a support region on the chosen colors; throws
// when a projected interval that must be finite is not.
enum class Boundedness { Finite, BoundedAbove };

std::vector<Box> project_support(const SupportRegion& sup, const GradingSpec& g, const Pattern& dirs,
                                 Boundedness need, const std::string& who) {
  std::vector<Box> out;
  for (const auto& [box, dim] : sup.cells) {
    (void)dim;
    auto cb = g.coarse_box(box);
    Box pb;
    for (int i : dirs.indices()) pb.iv.push_back(cb[i]);
    for (const auto& iv : pb.iv) {
      if (iv.hi_inf || (need == Boundedness::Finite && iv.lo_inf))
        throw std::logic_error(who + ": support escapes in a direction coordinate; engine inconsistency");
    }
    out.push_back(std::move(pb));
  }
  return out;
}

}  // namespace

AnchorSet anchor_points(const MonomialPrime& p, const GradedModule& m, int level) {
  const GradingSpec& g = m.grading();
  g.require_standard("anchor_points");
  Pattern dirs = directions(p, g);
  if (dirs.is_empty())
    throw std::invalid_argument("anchor points undefined: the prime does not contain R_1");
  auto dc = DegreewiseComplex::koszul(p.vars, m, complement(p.vars));
  auto sup = global_support(dc, level);
  auto boxes = project_support(sup, g, dirs, Boundedness::Finite, "anchor_points");
  Region region = Region::empty(dirs.count());
  for (auto& b : boxes) region.add(std::move(b));
  return AnchorSet{p, level, dirs, region_points(region)};
}

AnchorSet anchor_points_via_regrade(const MonomialPrime& p, const GradedModule& m, int level) {
  const GradingSpec& g = m.grading();
  g.require_standard("anchor_points");
  Pattern dirs = directions(p, g);
  if (dirs.is_empty())
    throw std::invalid_argument("anchor points undefined: the prime does not contain R_1");
  GradedModule regraded = regrade(m, Projection::keep(g.rank(), dirs));
  AnchorSet inner = anchor_points(p, regraded, level);
  return AnchorSet{p, level, dirs, std::move(inner.points)};
}

std::vector<Vec> anchor_points_all(const MonomialPrime& p, const GradedModule& m) {
  std::vector<Vec> pts;
  for (int i = 0; i <= p.vars.count(); ++i) {
    auto a = anchor_points(p, m, i);
    pts.insert(pts.end(), a.points.begin(), a.points.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::int64_t bass_number(const MonomialPrime& p, const GradedModule& m, int level) {
  const GradingSpec& g = m.grading();
  g.require_standard("bass_number");
  if (!p.is_maximal())
    throw std::invalid_argument("bass_number: only the *maximal case (all variables) is supported");
  auto dc = DegreewiseComplex::koszul(p.vars, m, Pattern::empty(m.nvars()));
  auto sup = global_support(dc, level);
  std::int64_t total = 0;
  for (const auto& [box, dim] : sup.cells) {
    if (!box.finite()) throw std::logic_error("bass_number: infinite Ext support; engine inconsistency");
    Region r = Region::empty(box.dim());
    r.add(box);
    total += dim * static_cast<std::int64_t>(region_points(r).size());
  }
  return total;
}

EndSet end_of(const MonomialIdeal& b, const GradedModule& m, int index) {
  const GradingSpec& g = m.grading();
  g.require_standard("end_of");
  Pattern dirs = directions(b, g);
  if (dirs.is_empty())
    throw std::invalid_argument("end undefined: dir(b) is empty, no end is defined");
  auto dc = DegreewiseComplex::cech(b, m);
  auto sup = global_support(dc, index);
  auto boxes = project_support(sup, g, dirs, Boundedness::BoundedAbove, "end_of");
  Region region = Region::empty(dirs.count());
  for (auto& bx : boxes) region.add(std::move(bx));
  auto pts = maximal_elements(PointSet::of_region(std::move(region)));
  return EndSet{b, index, dirs, pts.points()};
}

std::vector<Vec> q_bound(const GradedModule& m, const Pattern& q) {
  if (q.is_empty()) throw std::invalid_argument("q_bound: the pattern must be nonempty");
  const GradingSpec& g = m.grading();
  g.require_standard("q_bound");
  if (m.is_zero()) return {};
  MonomialIdeal cq = ideal_cQ(g, q);
  std::vector<Vec> pts;
  for (int i = 0; i <= static_cast<int>(cq.gens().size()); ++i) {
    auto e = end_of(cq, m, i);
    pts.insert(pts.end(), e.points.begin(), e.points.end());
  }
  return max_points(std::move(pts), q.count());
}

namespace {

// route (a): every coarse payload box must have a finite interval on some
// q-coordinate; collects one covering strip per box.
struct ContainmentProbe {
  bool containable = true;
  std::vector<QDomain> pieces;
  std::optional<Box> bad_box;
};

ContainmentProbe probe_containment(const SupportRegion& sup, const GradingSpec& g, const Pattern& q) {
  ContainmentProbe out;
  const int r = g.rank();
  for (const auto& [fine_box, dim] : sup.cells) {
    (void)dim;
    Box cb;
    cb.iv = g.coarse_box(fine_box);
    int strip = -1;
    for (int i : q.indices())
      if (cb.iv[i].finite()) {
        strip = i;
        break;
      }
    if (strip < 0) {
      out.containable = false;
      if (!out.bad_box) out.bad_box = cb;
      continue;
    }
    Vec s(r, 0), t(r, 0);
    s[strip] = cb.iv[strip].lo;
    t[strip] = cb.iv[strip].hi + 1;
    Pattern pat = Pattern::empty(r);
    pat.add(strip);
    out.pieces.emplace_back(std::move(s), std::move(t), pat);
  }
  return out;
}

// route (b): R_m nilpotent on H^i for m the indicator vector of q.
bool probe_annihilation(const DegreewiseComplex& dc, int i, const GradingSpec& g, const Pattern& q) {
  Vec mdir(g.rank(), 0);
  for (int j : q.indices()) mdir[j] = 1;
  for (const auto& e : g.monomials_of_degree(mdir))
    if (!monomial_nilpotent(dc, i, Monomial(e).support())) return false;
  return true;
}

}  // namespace

FinitenessG finiteness_dimension_g(const MonomialIdeal& b, const GradedModule& m, const Pattern& q) {
  const GradingSpec& g = m.grading();
  if (q.rank != g.rank()) throw std::invalid_argument("rank mismatch");
  auto dc = DegreewiseComplex::cech(b, m);
  FinitenessG out;
  for (int i = 0; i <= dc.length(); ++i) {
    auto sup = global_support(dc, i);
    auto route_a = probe_containment(sup, g, q);
    bool route_b = probe_annihilation(dc, i, g, q);
    if (route_a.containable != route_b)
      throw std::logic_error("finiteness dimension: containment and annihilation routes disagree; engine bug");
    if (!route_a.containable) {
      out.value = i;
      out.escape_box = route_a.bad_box;
      if (out.escape_box) out.escape_degree = out.escape_box->sample_point();
      return out;
    }
    out.witnesses.push_back(qdomain_cover(route_a.pieces, q));
  }
  out.value = std::nullopt;
  return out;
}

std::optional<int> finiteness_dimension_f(const MonomialIdeal& a, const MonomialIdeal& b,
                                          const GradedModule& m) {
  if (a.nvars() != m.nvars() || b.nvars() != m.nvars()) throw std::invalid_argument("rank mismatch");
  auto dc = DegreewiseComplex::cech(b, m);
  for (int i = 0; i <= dc.length(); ++i)
    for (const auto& w : a.gens())
      if (!monomial_nilpotent(dc, i, w.support())) return i;
  return std::nullopt;
}

namespace {

Region region_product(const Region& a, const Region& b) {
  Region out = Region::empty(a.dim + b.dim);
  for (const auto& x : a.boxes)
    for (const auto& y : b.boxes) {
      if (x.empty() || y.empty()) continue;
      Box prod;
      prod.iv = x.iv;
      prod.iv.insert(prod.iv.end(), y.iv.begin(), y.iv.end());
      out.add(std::move(prod));
    }
  return out;
}

const Region& lookup_or_empty(const std::map<int, Region>& m, int i) {
  static const Region kEmpty = Region::empty(1);
  auto it = m.find(i);
  return it == m.end() ? kEmpty : it->second;
}

}  // namespace

Region kunneth_support(const std::map<int, Region>& supp_a, const std::map<int, Region>& supp_b,
                       const Region& base_a, const Region& base_b, int index) {
  Region out = Region::empty(2);
  auto absorb = [&out](const Region& r) {
    for (const auto& b : r.boxes) out.add(b);
  };
  absorb(region_product(base_a, lookup_or_empty(supp_b, index)));
  absorb(region_product(lookup_or_empty(supp_a, index), base_b));
  for (int j = 2; j + 2 <= index + 1; ++j) {
    int l = index + 1 - j;
    absorb(region_product(lookup_or_empty(supp_a, j), lookup_or_empty(supp_b, l)));
  }
  return out;
}

// ---- reports ----

std::string Report::to_string() const {
  std::ostringstream os;
  os << "[" << check << "] instance=" << instance_id << " status=";
  switch (status) {
    case Status::Pass: os << "pass"; break;
    case Status::Fail: os << "FAIL"; break;
    case Status::Inconclusive: os << "inconclusive"; break;
  }
  if (!note.empty()) os << " note=" << note;
  os << "\n";
  for (const auto& d : details) os << "    " << d << "\n";
  return os.str();
}

std::string instance_hash(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << (h & 0xffffffffull);
  return os.str();
}

Report check_anchor_regrade(const std::string& id, const MonomialPrime& p, const GradedModule& m) {
  Report rep;
  rep.check = "anchor-regrade";
  rep.instance_id = id;
  for (int i = 0; i <= p.vars.count(); ++i) {
    auto direct = anchor_points(p, m, i);
    auto through = anchor_points_via_regrade(p, m, i);
    if (direct.points != through.points) {
      rep.status = Report::Status::Fail;
      rep.details.push_back("level " + std::to_string(i) + ": direct=" + points_to_string(direct.points) +
                            " regraded=" + points_to_string(through.points));
    } else if (!direct.points.empty()) {
      rep.details.push_back("level " + std::to_string(i) + ": anch=" + points_to_string(direct.points));
    }
  }
  return rep;
}

Report check_anchor_lifting(const std::string& id, const MonomialPrime& p, const MonomialPrime& q,
                            const GradedModule& m) {
  Report rep;
  rep.check = "anchor-lifting";
  rep.instance_id = id;
  if (!saturated_chain(p, q)) throw std::invalid_argument("anchor lifting requires a height-one step");
  const GradingSpec& g = m.grading();
  Pattern dp = directions(p, g), dq = directions(q, g);
  Projection rel = Projection::relative(dq, dp);
  for (int i = 0; i <= p.vars.count(); ++i) {
    auto lower = anchor_points(p, m, i);
    auto upper = anchor_points(q, m, i + 1);
    for (const auto& a : lower.points) {
      bool lifted = false;
      for (const auto& b : upper.points)
        if (rel.apply(b) == a) {
          lifted = true;
          break;
        }
      if (!lifted) {
        rep.status = Report::Status::Fail;
        rep.details.push_back("level " + std::to_string(i) + ": anchor " + vec_to_string(a) +
                              " has no lift in " + points_to_string(upper.points));
      }
    }
  }
  return rep;
}

Report check_anchor_extension(const std::string& id, const MonomialPrime& p, const GradedModule& m) {
  Report rep;
  rep.check = "anchor-extension";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  MonomialPrime qmax(p.nvars, Pattern::full(p.nvars));
  Pattern dp = directions(p, g), dq = directions(qmax, g);
  Projection rel = Projection::relative(dq, dp);
  auto upper = anchor_points_all(qmax, m);
  for (const auto& a : anchor_points_all(p, m)) {
    bool found = false;
    for (const auto& b : upper)
      if (rel.apply(b) == a) {
        found = true;
        break;
      }
    if (!found) {
      rep.status = Report::Status::Fail;
      rep.details.push_back("anchor " + vec_to_string(a) + " does not extend to the *maximal prime");
    }
  }
  return rep;
}

Report check_ends_vs_anchors(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                             int max_index) {
  Report rep;
  rep.check = "ends-vs-anchors";
  rep.instance_id = id;
  rep.note = "monomial primes only";
  const GradingSpec& g = m.grading();
  Pattern dirs = directions(b, g);
  if (dirs.is_empty()) throw std::invalid_argument("ends undefined: dir(b) empty");
  auto primes = monomial_primes_over(b);

  std::vector<Vec> end_union, anchor_union;
  for (int j = 0; j <= max_index; ++j) {
    auto e = end_of(b, m, j);
    end_union.insert(end_union.end(), e.points.begin(), e.points.end());
    for (const auto& p : primes) {
      Pattern dp = directions(p, g);
      Projection rel = Projection::relative(dp, dirs);
      auto a = anchor_points(p, m, j);
      for (const auto& pt : a.points) anchor_union.push_back(rel.apply(pt));
    }
    auto lhs = max_points(end_union, dirs.count());
    auto rhs = max_points(anchor_union, dirs.count());
    if (lhs != rhs) {
      rep.status = Report::Status::Inconclusive;
      rep.note = "non-monomial prime required";
      rep.details.push_back("j=" + std::to_string(j) + " ends-max=" + points_to_string(lhs) +
                            " anchors-max=" + points_to_string(rhs));
    } else if (j == max_index) {
      rep.details.push_back("j=" + std::to_string(j) + " max=" + points_to_string(lhs) +
                            " primes=" + std::to_string(primes.size()));
    }
  }
  return rep;
}

Report check_end_dominated(const std::string& id, const MonomialIdeal& b, const GradedModule& m) {
  Report rep;
  rep.check = "ends-dominated-by-bnd";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  Pattern dirs = directions(b, g);
  if (dirs.is_empty()) throw std::invalid_argument("ends undefined: dir(b) empty");
  std::vector<Vec> end_union;
  for (int j = 0; j <= static_cast<int>(b.gens().size()); ++j) {
    auto e = end_of(b, m, j);
    end_union.insert(end_union.end(), e.points.begin(), e.points.end());
  }
  auto lhs = max_points(std::move(end_union), dirs.count());
  auto bnd = m.is_zero() ? std::vector<Vec>{} : q_bound(m, dirs);
  bool ok = dominates(PointSet::of_points(dirs.count(), lhs), PointSet::of_points(dirs.count(), bnd));
  if (!ok) rep.status = Report::Status::Fail;
  rep.details.push_back("ends-max=" + points_to_string(lhs) + " bnd=" + points_to_string(bnd));
  return rep;
}

Report check_end_stabilization(const std::string& id, const MonomialIdeal& b, const GradedModule& m) {
  Report rep;
  rep.check = "end-stabilization";
  rep.instance_id = id;
  rep.note = "monomial primes only";
  const GradingSpec& g = m.grading();
  Pattern dirs = directions(b, g);
  if (dirs.is_empty()) throw std::invalid_argument("ends undefined: dir(b) empty");
  int t = static_cast<int>(b.gens().size());
  auto primes = monomial_primes_over(b);
  auto anchor_max_upto = [&](int cap) {
    std::vector<Vec> pts;
    for (const auto& p : primes) {
      Pattern dp = directions(p, g);
      Projection rel = Projection::relative(dp, dirs);
      for (int i = 0; i <= cap; ++i)
        for (const auto& a : anchor_points(p, m, i).points) pts.push_back(rel.apply(a));
    }
    return max_points(std::move(pts), dirs.count());
  };
  auto at_rank = anchor_max_upto(t);
  auto beyond = anchor_max_upto(std::min(t + 2, m.nvars()));
  if (at_rank != beyond) {
    rep.status = Report::Status::Fail;
    rep.details.push_back("rank-" + std::to_string(t) + " max=" + points_to_string(at_rank) +
                          " later=" + points_to_string(beyond));
  } else {
    rep.details.push_back("stable max=" + points_to_string(at_rank));
  }
  return rep;
}

Report check_maximal_reduction(const std::string& id, const MonomialIdeal& b, const GradedModule& m) {
  Report rep;
  rep.check = "maximal-reduction";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  Pattern dirs = directions(b, g);
  if (dirs.is_empty()) throw std::invalid_argument("ends undefined: dir(b) empty");
  std::vector<Vec> lhs_union;
  for (int j = 0; j <= static_cast<int>(b.gens().size()); ++j) {
    auto e = end_of(b, m, j);
    lhs_union.insert(lhs_union.end(), e.points.begin(), e.points.end());
  }
  auto lhs = max_points(std::move(lhs_union), dirs.count());

  MonomialPrime mx(m.nvars(), Pattern::full(m.nvars()));
  MonomialIdeal mx_ideal = mx.ideal();
  Projection rel = Projection::relative(directions(mx, g), dirs);
  std::vector<Vec> rhs_union;
  for (int j = 0; j <= static_cast<int>(mx_ideal.gens().size()); ++j) {
    auto e = end_of(mx_ideal, m, j);
    for (const auto& pt : e.points) rhs_union.push_back(rel.apply(pt));
  }
  auto rhs = max_points(std::move(rhs_union), dirs.count());
  if (lhs != rhs) {
    rep.status = Report::Status::Fail;
    rep.details.push_back("ends-max=" + points_to_string(lhs) + " via-maximal=" + points_to_string(rhs));
  } else {
    rep.details.push_back("max=" + points_to_string(lhs));
  }
  return rep;
}

Report check_vanishing_corner(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                              std::optional<std::int64_t>* corner_out) {
  Report rep;
  rep.check = "vanishing-corner";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  MonomialIdeal rplus = ideal_Rplus(g);
  for (const auto& gen : rplus.gens())
    if (!b.contains(gen))
      throw std::invalid_argument("vanishing corner requires an ideal containing R_+");

  auto dc = DegreewiseComplex::cech(b, m);
  std::optional<std::int64_t> corner;
  bool possible = true;
  for (int i = 0; i <= dc.length() && possible; ++i) {
    for (const auto& [box, dim] : global_support(dc, i).coarse_boxes(g)) {
      (void)dim;
      // least t with box disjoint from {n >= t*1}: min over bounded coordinates
      bool any = false;
      std::int64_t best = 0;
      for (const auto& iv : box.iv)
        if (!iv.hi_inf) {
          if (!any || iv.hi + 1 < best) best = iv.hi + 1;
          any = true;
        }
      if (!any) {
        possible = false;
        rep.status = Report::Status::Fail;
        rep.details.push_back("index " + std::to_string(i) + ": support box " + box.to_string() +
                              " meets every upper cone");
        break;
      }
      if (!corner || best > *corner) corner = best;
    }
  }
  if (possible) {
    // verify emptiness of the support above the corner
    if (corner) {
      Box cone;
      cone.iv.assign(g.rank(), Interval::at_least(*corner));
      Region cone_region = Region::empty(g.rank());
      cone_region.add(cone);
      for (int i = 0; i <= dc.length(); ++i) {
        Region coarse = Region::empty(g.rank());
        for (const auto& [box, dim] : global_support(dc, i).coarse_boxes(g)) {
          (void)dim;
          coarse.add(box);
        }
        if (!region_intersect(coarse, cone_region).is_empty()) {
          rep.status = Report::Status::Fail;
          rep.details.push_back("index " + std::to_string(i) + ": support meets the verified cone");
        }
      }
      rep.details.push_back("corner t=" + std::to_string(*corner));
    } else {
      rep.details.push_back("all cohomology vanishes");
    }
  }
  if (corner_out) *corner_out = corner;
  return rep;
}

Report check_mixed_vanishing(const std::string& id, const MonomialIdeal& b, const GradedModule& m) {
  Report rep;
  rep.check = "mixed-vanishing";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  Pattern dirs = directions(b, g);
  if (dirs.is_empty() || dirs.count() == g.rank())
    throw std::invalid_argument("mixed vanishing requires both directions and non-directions");
  // target coordinates: each non-direction kept, all directions summed
  auto dc = DegreewiseComplex::cech(b, m);
  std::optional<std::int64_t> corner;
  for (int i = 0; i <= dc.length(); ++i) {
    for (const auto& [box, dim] : global_support(dc, i).coarse_boxes(g)) {
      (void)dim;
      std::vector<Interval> img;
      for (int c = 0; c < g.rank(); ++c)
        if (!dirs.contains(c)) img.push_back(box.iv[c]);
      Interval sum = Interval::point(0);
      for (int c : dirs.indices()) sum = interval_sum(sum, box.iv[c]);
      img.push_back(sum);
      bool any = false;
      std::int64_t best = 0;
      for (const auto& iv : img)
        if (!iv.hi_inf) {
          if (!any || iv.hi + 1 < best) best = iv.hi + 1;
          any = true;
        }
      if (!any) {
        rep.status = Report::Status::Fail;
        rep.details.push_back("index " + std::to_string(i) + ": image of " + box.to_string() +
                              " meets every upper cone");
        continue;
      }
      if (!corner || best > *corner) corner = best;
    }
  }
  if (rep.status == Report::Status::Pass)
    rep.details.push_back(corner ? "corner t=" + std::to_string(*corner) : "all cohomology vanishes");
  return rep;
}

Report check_component_finiteness(const std::string& id, const GradedModule& m) {
  Report rep;
  rep.check = "component-finiteness";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  MonomialIdeal rplus = ideal_Rplus(g);
  auto dc = DegreewiseComplex::cech(rplus, m);
  for (int i = 0; i <= dc.length(); ++i) {
    for (const auto& [box, dim] : global_support(dc, i).cells) {
      (void)dim;
      // a fiber with fixed color sum slides iff one variable of the color is
      // free upward and another is free downward
      bool infinite = false;
      for (int c = 1; c <= g.rank() && !infinite; ++c) {
        auto vars = g.vars_of_color(c);
        for (int v : vars)
          if (box.iv[v].hi_inf && std::any_of(vars.begin(), vars.end(), [&](int w) {
                return w != v && box.iv[w].lo_inf;
              })) {
            infinite = true;
            break;
          }
      }
      for (int v : g.vars_of_color(0))
        if (!box.iv[v].finite()) infinite = true;
      if (infinite) {
        rep.status = Report::Status::Fail;
        rep.details.push_back("index " + std::to_string(i) + ": infinite coarse component on " +
                              box.to_string());
      }
    }
  }
  if (rep.status == Report::Status::Pass) rep.details.push_back("all coarse components finite");
  return rep;
}

Report check_domain_annihilator(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                                const Vec& mdir, int f) {
  Report rep;
  rep.check = "domain-annihilator";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  Pattern q = Pattern::support(mdir);
  auto dc = DegreewiseComplex::cech(b, m);
  std::vector<QDomain> pieces;
  bool all_contained = true;
  for (int i = 0; i < f; ++i) {
    auto sup = global_support(dc, i);
    auto route_a = probe_containment(sup, g, q);
    auto u = annihilation_exponent(dc, i, mdir);
    bool route_b = u.has_value();
    if (route_a.containable != route_b) {
      rep.status = Report::Status::Fail;
      rep.details.push_back("index " + std::to_string(i) + ": containment=" +
                            (route_a.containable ? "yes" : "no") + " annihilation=" +
                            (route_b ? "yes" : "no"));
      all_contained = false;
      continue;
    }
    if (!route_a.containable) {
      rep.details.push_back("index " + std::to_string(i) + ": both routes negative");
      all_contained = false;
      continue;
    }
    rep.details.push_back("index " + std::to_string(i) + ": u=" + std::to_string(*u) + " domain=" +
                          qdomain_cover(route_a.pieces, q).to_string());
    for (const auto& piece : route_a.pieces) pieces.push_back(piece);
  }
  if (rep.status == Report::Status::Pass && f > 0 && all_contained) {
    // one domain containing every support below f
    QDomain all = qdomain_cover(pieces, q);
    Region strips = Region::empty(g.rank());
    for (int i : q.indices())
      if (all.t[i] > all.s[i]) {
        Box strip = box_all(g.rank());
        strip.iv[i] = Interval::closed(all.s[i], all.t[i] - 1);
        strips.add(std::move(strip));
      }
    for (int i = 0; i < f; ++i) {
      Region coarse = Region::empty(g.rank());
      for (const auto& [box, dim] : global_support(dc, i).coarse_boxes(g)) {
        (void)dim;
        coarse.add(box);
      }
      if (!region_subset(coarse, strips)) {
        rep.status = Report::Status::Fail;
        rep.details.push_back("index " + std::to_string(i) + ": shared domain " + all.to_string() +
                              " misses the support");
      }
    }
  }
  return rep;
}

Report check_f_equals_g(const std::string& id, const MonomialIdeal& b, const GradedModule& m,
                        const std::vector<Vec>& degrees) {
  Report rep;
  rep.check = "f-equals-g";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  std::vector<Monomial> gens;
  for (const auto& d : degrees)
    for (const auto& e : g.monomials_of_degree(d)) gens.emplace_back(e);
  MonomialIdeal a = MonomialIdeal::make(g.nvars(), std::move(gens));
  auto fval = finiteness_dimension_f(a, b, m);
  std::optional<int> ginf;  // inf over an all-infinite family stays infinite
  for (const auto& d : degrees) {
    auto gq = finiteness_dimension_g(b, m, Pattern::support(d)).value;
    if (gq && (!ginf || *gq < *ginf)) ginf = gq;
  }
  auto fmt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  if ((fval && ginf && *fval == *ginf) || (!fval && !ginf)) {
    rep.details.push_back("f=" + fmt(fval) + " inf-g=" + fmt(ginf));
  } else {
    rep.status = Report::Status::Fail;
    rep.details.push_back("f=" + fmt(fval) + " inf-g=" + fmt(ginf));
  }
  return rep;
}

Report check_grade_identity(const std::string& id, const MonomialIdeal& b, const GradedModule& m) {
  Report rep;
  rep.check = "grade-identity";
  rep.instance_id = id;
  auto dc = DegreewiseComplex::cech(b, m);
  std::optional<int> grade;
  for (int i = 0; i <= dc.length(); ++i)
    if (!global_support(dc, i).empty()) {
      grade = i;
      break;
    }
  auto f_unit = finiteness_dimension_f(MonomialIdeal::unit(m.nvars()), b, m);
  auto g_empty = finiteness_dimension_g(b, m, Pattern::empty(m.grading().rank())).value;
  auto fmt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  bool ok = (f_unit == grade) && (g_empty == grade);
  if (!ok) rep.status = Report::Status::Fail;
  rep.details.push_back("grade=" + fmt(grade) + " f-unit=" + fmt(f_unit) + " g-empty=" + fmt(g_empty));
  return rep;
}

Report check_finitely_graded_identity(const std::string& id, const MonomialIdeal& b,
                                      const GradedModule& m) {
  Report rep;
  rep.check = "finitely-graded-identity";
  rep.instance_id = id;
  const GradingSpec& g = m.grading();
  g.require_standard("check_finitely_graded_identity");
  auto dc = DegreewiseComplex::cech(b, m);
  // least index whose coarse support is an infinite set
  std::optional<int> least_infinite;
  for (int i = 0; i <= dc.length() && !least_infinite; ++i)
    for (const auto& [box, dim] : global_support(dc, i).coarse_boxes(g)) {
      (void)dim;
      if (!box.finite()) {
        least_infinite = i;
        break;
      }
    }
  auto f_c = finiteness_dimension_f(ideal_c(g), b, m);
  // min over singleton patterns
  std::optional<int> min_g;
  bool min_inf = true;
  for (int j = 0; j < g.rank(); ++j) {
    Pattern q = Pattern::empty(g.rank());
    q.add(j);
    auto gq = finiteness_dimension_g(b, m, q).value;
    if (gq) {
      if (!min_g || *gq < *min_g) min_g = gq;
      min_inf = false;
    }
  }
  if (min_inf) min_g = std::nullopt;
  auto fmt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  bool ok = (f_c == least_infinite) && (min_g == least_infinite);
  if (!ok) rep.status = Report::Status::Fail;
  rep.details.push_back("least-infinite=" + fmt(least_infinite) + " f-c=" + fmt(f_c) +
                        " min-singleton-g=" + fmt(min_g));
  return rep;
}

}  // namespace mlc
