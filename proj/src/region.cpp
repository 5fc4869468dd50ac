#include "beflow/region.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace beflow {

Rat trace_of(const FlowPoint& p) {
  if (p.alpha >= Rat(1))
    throw UndefinedTrace("no trace is defined at alpha >= 1");
  return (p.r - Rat(2) * p.alpha) / (Rat(1) - p.alpha);
}

namespace {

struct Line {
  Rat a, b;  // alpha = a - b r
  VertexSet from;
};

Rat eval(const Line& l, const Rat& r) { return l.a - l.b * r; }

Rat cross_r(const Line& p, const Line& q) {
  return (p.a - q.a) / (p.b - q.b);
}

// Upper envelope over r in [2, inf). Lines must be nonempty and contain at
// least one with b = 0 so the envelope flattens out.
FlowRegion envelope(std::vector<Line> lines, const Window& window,
                    const std::optional<Bisection>& witness) {
  // One line per slope: keep the largest intercept.
  std::map<Rat, Line> by_slope;  // key: b
  for (const Line& l : lines) {
    auto it = by_slope.find(l.b);
    if (it == by_slope.end() || l.a > it->second.a)
      by_slope.insert_or_assign(l.b, l);
  }
  // Slope of alpha = a - b r is -b; ascending slope = descending b.
  std::vector<Line> sorted;
  sorted.reserve(by_slope.size());
  for (auto it = by_slope.rbegin(); it != by_slope.rend(); ++it)
    sorted.push_back(it->second);

  std::vector<Line> hull;
  for (const Line& l : sorted) {
    while (hull.size() >= 2 &&
           cross_r(hull[hull.size() - 2], l) <=
               cross_r(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    // A new line with equal value everywhere cannot occur (slopes distinct);
    // a line below the last at every r >= its crossing is kept and trimmed
    // against r = 2 later.
    hull.push_back(l);
  }
  std::vector<Rat> bp;  // bp[i] = crossing of hull[i-1], hull[i]
  for (size_t i = 1; i < hull.size(); ++i)
    bp.push_back(cross_r(hull[i - 1], hull[i]));

  // Active piece at r = 2.
  size_t s = 0;
  while (s < bp.size() && bp[s] <= Rat(2)) ++s;

  FlowRegion reg;
  reg.window = window;
  FrontierPoint first;
  first.r = Rat(2);
  first.alpha = eval(hull[s], Rat(2));
  first.witness = witness;
  first.binding = {hull[s].from};
  reg.frontier.push_back(std::move(first));
  for (size_t i = s; i < bp.size(); ++i) {
    FrontierPoint fp;
    fp.r = bp[i];
    fp.alpha = eval(hull[i], bp[i]);
    fp.witness = witness;
    fp.binding = {hull[i].from, hull[i + 1].from};
    reg.frontier.push_back(std::move(fp));
  }
  reg.alpha_min = reg.frontier.back().alpha;
  reg.r_min = reg.frontier.back().r;
  return reg;
}

}  // namespace

Rat frontier_alpha(const FlowRegion& reg, const Rat& r) {
  if (r < Rat(2)) throw MalformedInput("frontier undefined left of r = 2");
  const auto& f = reg.frontier;
  if (r >= f.back().r) return f.back().alpha;
  if (r <= f.front().r) return f.front().alpha;
  for (size_t i = 0; i + 1 < f.size(); ++i) {
    if (r >= f[i].r && r <= f[i + 1].r) {
      Rat t = (r - f[i].r) / (f[i + 1].r - f[i].r);
      return f[i].alpha + t * (f[i + 1].alpha - f[i].alpha);
    }
  }
  return f.back().alpha;  // unreachable
}

bool region_contains(const FlowRegion& reg, const FlowPoint& p) {
  if (p.alpha >= Rat(1)) return true;
  return p.alpha >= frontier_alpha(reg, p.r);
}

bool region_subset(const FlowRegion& a, const FlowRegion& b) {
  std::vector<Rat> rs;
  for (const auto& fp : a.frontier) rs.push_back(fp.r);
  for (const auto& fp : b.frontier) rs.push_back(fp.r);
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (const Rat& r : rs)
    if (frontier_alpha(b, r) > frontier_alpha(a, r)) return false;
  // Beyond the last breakpoint both envelopes are flat.
  return b.alpha_min <= a.alpha_min;
}

bool region_equal(const FlowRegion& a, const FlowRegion& b) {
  return region_subset(a, b) && region_subset(b, a);
}

Rat min_trace(const FlowRegion& reg) {
  bool have = false;
  Rat best(0);
  for (const auto& fp : reg.frontier) {
    if (fp.alpha >= Rat(1)) continue;
    Rat t = trace_of(FlowPoint(fp.r, fp.alpha));
    if (!have || t < best) {
      best = t;
      have = true;
    }
  }
  if (!have) throw EmptyBelowOne("region has no frontier point below alpha = 1");
  return best;
}

FlowRegion bed_of_bisection(const CubicMultigraph& g, const Bisection& bis,
                            const Window& window, int max_n) {
  if (g.n() > max_n)
    throw TooLarge("bed enumeration capped at n = " + std::to_string(max_n));
  auto cert = check_orientable(g, bis);
  if (!cert.orientable()) throw NotOrientable("bisection is not orientable");

  std::map<std::tuple<int, int, int>, VertexSet> triples;
  uint64_t limit = uint64_t(1) << g.n();
  for (uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet a{bits};
    triples.emplace(std::make_tuple(cut_degree(g, a), Delta(bis, a), a.size()),
                    a);
  }
  std::map<std::pair<Rat, Rat>, VertexSet> by_line;
  for (const auto& [key, a] : triples) {
    auto [d, dd, sz] = key;
    Rat la = Rat(d) / Rat(sz);
    Rat lb = Rat(d - dd) / Rat(2 * sz);
    if (lb < Rat(0))
      throw InternalVerificationFailed("negative slope from orientable bisection");
    by_line.emplace(std::make_pair(la, lb), a);
  }
  std::vector<Line> lines;
  lines.reserve(by_line.size());
  for (const auto& [ab, a] : by_line) lines.push_back({ab.first, ab.second, a});
  return envelope(std::move(lines), window, bis);
}

namespace {

// Pointwise minimum of two frontiers; witness ties go to a.
FlowRegion merge_min(const FlowRegion& a, const FlowRegion& b) {
  std::vector<Rat> rs;
  for (const auto& fp : a.frontier) rs.push_back(fp.r);
  for (const auto& fp : b.frontier) rs.push_back(fp.r);
  // Crossing candidates between segment pairs.
  auto segments = [](const FlowRegion& reg) {
    std::vector<std::tuple<Rat, Rat, Rat, Rat>> segs;  // r0, a0, r1, a1
    for (size_t i = 0; i + 1 < reg.frontier.size(); ++i)
      segs.push_back({reg.frontier[i].r, reg.frontier[i].alpha,
                      reg.frontier[i + 1].r, reg.frontier[i + 1].alpha});
    return segs;
  };
  for (const auto& [ar0, aa0, ar1, aa1] : segments(a)) {
    for (const auto& [br0, ba0, br1, ba1] : segments(b)) {
      Rat lo = max(ar0, br0), hi = min(ar1, br1);
      if (lo >= hi) continue;
      // alpha_a(r) = aa0 + sa (r - ar0), likewise for b.
      Rat sa = (aa1 - aa0) / (ar1 - ar0);
      Rat sb = (ba1 - ba0) / (br1 - br0);
      if (sa == sb) continue;
      Rat r = ((ba0 - sb * br0) - (aa0 - sa * ar0)) / (sa - sb);
      if (r > lo && r < hi) rs.push_back(r);
    }
  }
  // Crossings with the horizontal tails.
  auto tail_cross = [&rs](const FlowRegion& x, const FlowRegion& y) {
    for (size_t i = 0; i + 1 < x.frontier.size(); ++i) {
      const auto& p0 = x.frontier[i];
      const auto& p1 = x.frontier[i + 1];
      if (p1.r <= y.r_min) continue;
      if (p0.alpha == p1.alpha) continue;
      Rat s = (p1.alpha - p0.alpha) / (p1.r - p0.r);
      Rat r = p0.r + (y.alpha_min - p0.alpha) / s;
      if (r > max(p0.r, y.r_min) && r < p1.r) rs.push_back(r);
    }
  };
  tail_cross(a, b);
  tail_cross(b, a);
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  // Evaluate the minimum at every candidate; decide the winner per interval.
  FlowRegion out;
  out.window = a.window;
  std::vector<FrontierPoint> pts;
  for (const Rat& r : rs) {
    Rat va = frontier_alpha(a, r), vb = frontier_alpha(b, r);
    FrontierPoint fp;
    fp.r = r;
    fp.alpha = min(va, vb);
    const FlowRegion& win = (va <= vb) ? a : b;
    // Inherit vertex metadata when this candidate is the winner's own vertex.
    for (const auto& wfp : win.frontier)
      if (wfp.r == r) {
        fp.witness = wfp.witness;
        fp.binding = wfp.binding;
        break;
      }
    pts.push_back(std::move(fp));
  }
  // Segment witnesses: winner at the midpoint of each interval.
  for (size_t i = 0; i < pts.size(); ++i) {
    Rat rmid = (i + 1 < pts.size()) ? (pts[i].r + pts[i + 1].r) / Rat(2)
                                    : pts[i].r + Rat(1);
    Rat va = frontier_alpha(a, rmid), vb = frontier_alpha(b, rmid);
    const FlowRegion& win = (va <= vb) ? a : b;
    // Winner's witness on its segment containing rmid.
    const auto& wf = win.frontier;
    std::optional<Bisection> w;
    for (size_t j = 0; j < wf.size(); ++j) {
      bool last = (j + 1 == wf.size());
      if ((last && rmid >= wf[j].r) ||
          (!last && rmid >= wf[j].r && rmid < wf[j + 1].r)) {
        w = wf[j].witness;
        break;
      }
    }
    pts[i].witness = std::move(w);
  }
  // Drop collinear interior points with an unchanged witness.
  std::vector<FrontierPoint> kept;
  auto same_witness = [](const std::optional<Bisection>& x,
                         const std::optional<Bisection>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x.has_value() || x->color == y->color;
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!kept.empty() && i + 1 < pts.size()) {
      const auto& p = kept.back();
      const auto& q = pts[i];
      const auto& r = pts[i + 1];
      Rat lhs = (q.alpha - p.alpha) * (r.r - p.r);
      Rat rhs = (r.alpha - p.alpha) * (q.r - p.r);
      if (lhs == rhs && same_witness(p.witness, q.witness)) continue;
    }
    kept.push_back(pts[i]);
  }
  // r_min is the first point attaining the final level: drop the rest of
  // the horizontal tail.
  while (kept.size() >= 2 &&
         kept[kept.size() - 1].alpha == kept[kept.size() - 2].alpha)
    kept.pop_back();
  out.frontier = std::move(kept);
  out.alpha_min = out.frontier.back().alpha;
  out.r_min = out.frontier.back().r;
  return out;
}

}  // namespace

FlowRegion bed_of_graph(const CubicMultigraph& g, const Window& window,
                        int max_n) {
  if (g.n() > max_n)
    throw TooLarge("bed(G) capped at n = " + std::to_string(max_n));
  auto bisections = enumerate_orientable_bisections(g, max_n);
  if (bisections.empty())
    throw InternalVerificationFailed("cubic graph with no orientable bisection");
  std::optional<FlowRegion> acc;
  for (const auto& [bis, orient] : bisections) {
    FlowRegion r = bed_of_bisection(g, bis, window, std::max(max_n, 20));
    acc = acc ? merge_min(*acc, r) : r;
  }
  return *acc;
}

FlowPoint mk_endpoint(int k) {
  if (k < 3) throw BadK("k must be at least 3");
  return FlowPoint(Rat(3) + Rat(k - 3, k - 1), Rat(k - 3, k - 1));
}

NamedRegion named_region(NamedRegion::Kind kind, int k) {
  if (kind == NamedRegion::Kind::Urd)
    throw MalformedInput("urd needs an anchor point");
  if (k < 3) throw BadK("k must be at least 3");
  return NamedRegion{kind, k, std::nullopt};
}

NamedRegion named_urd(const FlowPoint& p) {
  return NamedRegion{NamedRegion::Kind::Urd, 0, p};
}

FlowRegion urd_region(const FlowPoint& p) {
  FlowRegion reg;
  FrontierPoint corner{Rat(2), Rat(1), std::nullopt, {}};
  reg.frontier.push_back(std::move(corner));
  if (p.r > Rat(2)) {
    FrontierPoint anchor{p.r, p.alpha, std::nullopt, {}};
    reg.frontier.push_back(std::move(anchor));
  }
  reg.alpha_min = reg.frontier.back().alpha;
  reg.r_min = reg.frontier.back().r;
  return reg;
}

bool named_contains(const NamedRegion& nr, const FlowPoint& p) {
  switch (nr.kind) {
    case NamedRegion::Kind::Lk: {
      Rat on_line = Rat(nr.k) - p.r;
      return p.alpha * Rat(nr.k - 2) == on_line && p.r > Rat(2) &&
             p.r <= Rat(nr.k);
    }
    case NamedRegion::Kind::Mk: {
      Rat on_line = Rat(nr.k) - p.r;
      return p.alpha * Rat(nr.k - 2) == on_line && p.r > Rat(2) &&
             p.r <= mk_endpoint(nr.k).r;
    }
    case NamedRegion::Kind::Ak: {
      if (!(p.r > Rat(2) && p.r < Rat(4))) return false;
      Rat lower = (Rat(nr.k) - p.r) / Rat(nr.k - 2);
      Rat upper = (Rat(nr.k) - p.r + Rat(1)) / Rat(nr.k - 1);
      return p.alpha >= lower && p.alpha < upper;
    }
    case NamedRegion::Kind::Urd:
      return region_contains(urd_region(*nr.anchor), p);
  }
  return false;
}

std::optional<Bisection> dominant_orientation_search(const CubicMultigraph& g,
                                                     int max_n) {
  if (g.n() > max_n)
    throw TooLarge("dominant search capped at n = " + std::to_string(max_n));
  auto bisections = enumerate_orientable_bisections(g, max_n);
  std::vector<FlowRegion> beds;
  beds.reserve(bisections.size());
  std::optional<FlowRegion> acc;
  for (const auto& [bis, orient] : bisections) {
    beds.push_back(bed_of_bisection(g, bis, {}, std::max(max_n, 20)));
    acc = acc ? merge_min(*acc, beds.back()) : beds.back();
  }
  for (size_t i = 0; i < beds.size(); ++i)
    if (region_equal(beds[i], *acc)) return bisections[i].first;
  return std::nullopt;
}

}  // namespace beflow
