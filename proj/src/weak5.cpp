#include "beflow/weak5.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "beflow/bisection.hpp"

namespace beflow {

namespace {

int factor_degree(const CubicMultigraph& g, const std::vector<char>& in_factor,
                  int v) {
  int d = 0;
  for (int e : g.incident(v)) d += in_factor[e];
  return d;
}

// Splits a factor edge set into ordered components. Deterministic: paths
// start at their smaller-id endpoint; cycles are ordered so the chosen
// external edge closes them (vk -> v1) with v1 its smaller endpoint.
// Returns false if some odd cycle has no simple edge (cannot happen for a
// valid factor; treated as a rejected candidate by the search).
bool split_components(const CubicMultigraph& g,
                      const std::vector<char>& in_factor,
                      FactorDecomposition& out) {
  int n = g.n();
  out.comps.clear();
  out.comp_of.assign(n, -1);
  out.in_factor = in_factor;
  out.critical_edges.clear();

  std::vector<char> used_edge(g.edge_count(), 0);
  auto walk = [&](int start, int first_edge) {
    // Follows factor edges from start, never reusing an edge.
    std::vector<int> vs{start}, es;
    int v = start, e = first_edge;
    while (e != -1) {
      es.push_back(e);
      used_edge[e] = 1;
      v = g.other_end(e, v);
      vs.push_back(v);
      e = -1;
      for (int cand : g.incident(v))
        if (in_factor[cand] && !used_edge[cand]) {
          e = cand;
          break;
        }
    }
    return std::make_pair(vs, es);
  };

  // Paths first: endpoints have factor degree 1.
  for (int v = 0; v < n; ++v) {
    if (out.comp_of[v] != -1 || factor_degree(g, in_factor, v) != 1) continue;
    int first = -1;
    for (int e : g.incident(v))
      if (in_factor[e]) first = e;
    auto [vs, es] = walk(v, first);
    if (vs.back() < vs.front()) {
      std::reverse(vs.begin(), vs.end());
      std::reverse(es.begin(), es.end());
    }
    FactorComponent comp;
    comp.kind = CompKind::Path;
    comp.vertices = vs;
    comp.edges = es;
    int id = static_cast<int>(out.comps.size());
    for (int x : vs) out.comp_of[x] = id;
    out.comps.push_back(std::move(comp));
  }
  // Remaining factor vertices lie on cycles.
  for (int v = 0; v < n; ++v) {
    if (out.comp_of[v] != -1) continue;
    if (factor_degree(g, in_factor, v) != 2) return false;  // isolated vertex
    int first = -1;
    for (int e : g.incident(v))
      if (in_factor[e] && !used_edge[e]) {
        first = e;
        break;
      }
    auto [vs, es] = walk(v, first);
    // walk returns v1 .. v1 around the cycle
    vs.pop_back();
    FactorComponent comp;
    comp.vertices = vs;
    comp.edges = es;
    comp.kind = (vs.size() % 2 == 0) ? CompKind::EvenCycle : CompKind::OddCycle;
    // Choose the external edge: lowest-index simple edge for odd cycles,
    // lowest-index edge otherwise.
    int chosen = -1;
    for (int e : comp.edges) {
      if (comp.kind == CompKind::OddCycle &&
          g.multiplicity(g.edge(e).u, g.edge(e).v) != 1)
        continue;
      if (chosen == -1 || e < chosen) chosen = e;
    }
    if (chosen == -1) return false;
    // Reorder: v1 = smaller endpoint of chosen, walk away from chosen.
    int a = std::min(g.edge(chosen).u, g.edge(chosen).v);
    int b = g.other_end(chosen, a);
    std::vector<int> order{a};
    std::vector<int> oedges;
    int cur = a, cure = -1;
    for (int e : comp.edges)
      if (e != chosen && (g.edge(e).u == a || g.edge(e).v == a)) cure = e;
    while (cur != b) {
      oedges.push_back(cure);
      cur = g.other_end(cure, cur);
      order.push_back(cur);
      if (cur == b) break;
      int next = -1;
      for (int e : comp.edges) {
        if (e == cure || e == chosen) continue;
        if (g.edge(e).u == cur || g.edge(e).v == cur) {
          bool already = std::find(oedges.begin(), oedges.end(), e) != oedges.end();
          if (!already) next = e;
        }
      }
      cure = next;
    }
    oedges.push_back(chosen);
    comp.vertices = order;
    comp.edges = oedges;
    int id = static_cast<int>(out.comps.size());
    for (int x : comp.vertices) out.comp_of[x] = id;
    out.comps.push_back(std::move(comp));
  }

  // Critical edges: from an external vertex of an odd cycle to a vertex
  // outside that cycle.
  for (const FactorComponent& comp : out.comps) {
    if (comp.kind != CompKind::OddCycle) continue;
    for (int y : {comp.vertices.front(), comp.vertices.back()}) {
      for (int e : g.incident(y)) {
        if (in_factor[e]) continue;
        int x = g.other_end(e, y);
        if (out.comp_of[x] != out.comp_of[y])
          out.critical_edges.push_back(e);
      }
    }
  }
  std::sort(out.critical_edges.begin(), out.critical_edges.end());
  out.critical_edges.erase(
      std::unique(out.critical_edges.begin(), out.critical_edges.end()),
      out.critical_edges.end());
  return true;
}

}  // namespace

std::vector<std::string> check_factor(const CubicMultigraph& g,
                                      const FactorDecomposition& f) {
  if (static_cast<int>(f.comp_of.size()) != g.n() ||
      static_cast<int>(f.in_factor.size()) != g.edge_count())
    throw Inconsistent("decomposition sized for a different graph");
  std::vector<std::string> bad;
  auto complain = [&](const std::string& msg) { bad.push_back(msg); };

  // Shapes and spanning.
  std::vector<char> seen(g.n(), 0);
  for (size_t ci = 0; ci < f.comps.size(); ++ci) {
    const FactorComponent& c = f.comps[ci];
    size_t k = c.vertices.size();
    if (k < 2) complain("component " + std::to_string(ci) + " too small");
    size_t want_edges = (c.kind == CompKind::Path) ? k - 1 : k;
    if (c.edges.size() != want_edges)
      complain("component " + std::to_string(ci) + " edge count mismatch");
    for (int v : c.vertices) {
      if (v < 0 || v >= g.n()) throw Inconsistent("vertex out of range");
      if (seen[v]) complain("vertex " + std::to_string(v) + " in two components");
      seen[v] = 1;
      if (f.comp_of[v] != static_cast<int>(ci))
        complain("comp_of mismatch at vertex " + std::to_string(v));
    }
    for (size_t i = 0; i < c.edges.size(); ++i) {
      int e = c.edges[i];
      if (e < 0 || e >= g.edge_count()) throw Inconsistent("edge out of range");
      if (!f.in_factor[e])
        complain("edge " + std::to_string(e) + " not marked in factor");
      int a = c.vertices[i % k], b = c.vertices[(i + 1) % k];
      const Edge& ge = g.edge(e);
      if (!((ge.u == a && ge.v == b) || (ge.u == b && ge.v == a)))
        complain("edge " + std::to_string(e) + " does not follow the order");
    }
    if (c.kind == CompKind::OddCycle && k % 2 == 0)
      complain("odd cycle of even order");
    if (c.kind == CompKind::EvenCycle && k % 2 == 1)
      complain("even cycle of odd order");
  }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) complain("vertex " + std::to_string(v) + " uncovered");

  auto endpoints_of = [&](const FactorComponent& c) {
    return std::make_pair(c.vertices.front(), c.vertices.back());
  };

  // Condition 1: endpoints of an odd path are non-adjacent.
  for (const FactorComponent& c : f.comps) {
    if (c.kind != CompKind::Path || c.vertices.size() % 2 == 0) continue;
    auto [a, b] = endpoints_of(c);
    if (g.multiplicity(a, b) > 0)
      complain("condition 1: endpoints " + std::to_string(a) + "," +
               std::to_string(b) + " of an odd path are adjacent");
  }
  // Condition 2: endpoints of distinct paths are non-adjacent.
  for (size_t i = 0; i < f.comps.size(); ++i) {
    if (f.comps[i].kind != CompKind::Path) continue;
    for (size_t j = i + 1; j < f.comps.size(); ++j) {
      if (f.comps[j].kind != CompKind::Path) continue;
      auto [a1, b1] = endpoints_of(f.comps[i]);
      auto [a2, b2] = endpoints_of(f.comps[j]);
      for (int x : {a1, b1})
        for (int y : {a2, b2})
          if (g.multiplicity(x, y) > 0)
            complain("condition 2: path endpoints " + std::to_string(x) + "," +
                     std::to_string(y) + " adjacent");
    }
  }
  // Condition 3: a chord of an odd cycle is parallel to a cycle edge.
  for (size_t ci = 0; ci < f.comps.size(); ++ci) {
    const FactorComponent& c = f.comps[ci];
    if (c.kind != CompKind::OddCycle) continue;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (f.in_factor[e]) continue;
      const Edge& ge = g.edge(e);
      if (f.comp_of[ge.u] != static_cast<int>(ci) ||
          f.comp_of[ge.v] != static_cast<int>(ci))
        continue;
      bool parallel = false;
      for (int ce : c.edges) {
        const Edge& gc = g.edge(ce);
        if ((gc.u == ge.u && gc.v == ge.v) || (gc.u == ge.v && gc.v == ge.u))
          parallel = true;
      }
      if (!parallel)
        complain("condition 3: chord " + std::to_string(e) +
                 " not parallel to a cycle edge");
    }
  }
  // Condition 4: a neighbor outside an odd cycle is internal on an odd path.
  for (size_t ci = 0; ci < f.comps.size(); ++ci) {
    const FactorComponent& c = f.comps[ci];
    if (c.kind != CompKind::OddCycle) continue;
    for (int y : c.vertices) {
      for (int e : g.incident(y)) {
        if (f.in_factor[e]) continue;
        int x = g.other_end(e, y);
        if (f.comp_of[x] == static_cast<int>(ci)) continue;
        const FactorComponent& cx = f.comps[f.comp_of[x]];
        bool internal_odd_path = cx.kind == CompKind::Path &&
                                 cx.vertices.size() % 2 == 1 &&
                                 x != cx.vertices.front() &&
                                 x != cx.vertices.back();
        if (!internal_odd_path)
          complain("condition 4: edge " + std::to_string(e) +
                   " leaves an odd cycle but does not reach an internal odd-path vertex");
      }
    }
  }
  // Condition 5: an odd path connects to at most one vertex of at most one
  // odd cycle.
  for (size_t pi = 0; pi < f.comps.size(); ++pi) {
    const FactorComponent& p = f.comps[pi];
    if (p.kind != CompKind::Path || p.vertices.size() % 2 == 0) continue;
    int links = 0;
    for (int x : p.vertices)
      for (int e : g.incident(x)) {
        if (f.in_factor[e]) continue;
        int y = g.other_end(e, x);
        if (f.comp_of[y] != static_cast<int>(pi) &&
            f.comps[f.comp_of[y]].kind == CompKind::OddCycle)
          ++links;
      }
    if (links > 1)
      complain("condition 5: odd path " + std::to_string(pi) +
               " linked to odd cycles by " + std::to_string(links) + " edges");
  }
  return bad;
}

namespace {

struct FactorSearch {
  const CubicMultigraph& g;
  std::vector<char> state;  // 0 undecided, 1 in, 2 out (per edge)
  std::vector<int> fdeg, undecided;
  std::optional<FactorDecomposition> found;

  explicit FactorSearch(const CubicMultigraph& gg)
      : g(gg), state(gg.edge_count(), 0), fdeg(gg.n(), 0), undecided(gg.n(), 3) {}

  bool vertex_ok(int v) const {
    if (fdeg[v] > 2) return false;
    if (undecided[v] == 0 && fdeg[v] < 1) return false;
    return true;
  }

  bool run(int e) {
    if (found) return true;
    if (e == g.edge_count()) return at_leaf();
    const Edge& ge = g.edge(e);
    for (char choice : {char(1), char(2)}) {
      state[e] = choice;
      if (choice == 1) {
        ++fdeg[ge.u];
        ++fdeg[ge.v];
      }
      --undecided[ge.u];
      --undecided[ge.v];
      if (vertex_ok(ge.u) && vertex_ok(ge.v) && run(e + 1)) return true;
      ++undecided[ge.u];
      ++undecided[ge.v];
      if (choice == 1) {
        --fdeg[ge.u];
        --fdeg[ge.v];
      }
      state[e] = 0;
    }
    return false;
  }

  bool at_leaf() {
    std::vector<char> in_factor(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) in_factor[e] = (state[e] == 1);
    FactorDecomposition f;
    if (!split_components(g, in_factor, f)) return false;
    for (const FactorComponent& c : f.comps)
      if (c.kind == CompKind::Path && c.vertices.size() < 2) return false;
    if (!check_factor(g, f).empty()) return false;
    found = std::move(f);
    return true;
  }
};

}  // namespace

std::optional<FactorDecomposition> find_factor(const CubicMultigraph& g) {
  if (!g.is_connected()) throw NotConnected("factor search needs a connected graph");
  FactorSearch search(g);
  search.run(0);
  return search.found;
}

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

}  // namespace

SkeletalStructure build_skeletal(const CubicMultigraph& g,
                                 const FactorDecomposition& f) {
  if (!check_factor(g, f).empty()) throw FactorInvalid("factor fails its conditions");
  int nc = static_cast<int>(f.comps.size());
  SkeletalStructure s;
  DSU dsu(nc);
  // Critical edges first; condition 5 keeps the contraction acyclic.
  for (int e : f.critical_edges) {
    int cu = f.comp_of[g.edge(e).u], cv = f.comp_of[g.edge(e).v];
    if (!dsu.unite(cu, cv))
      throw FactorInvalid("critical edges close a cycle after contraction");
    s.tree_edges.push_back(e);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.in_factor[e]) continue;
    int cu = f.comp_of[g.edge(e).u], cv = f.comp_of[g.edge(e).v];
    if (cu == cv) continue;
    if (dsu.unite(cu, cv)) s.tree_edges.push_back(e);
  }
  if (static_cast<int>(s.tree_edges.size()) != nc - 1)
    throw FactorInvalid("contracted structure is not a spanning tree");
  std::sort(s.tree_edges.begin(), s.tree_edges.end());

  // Even-edge removal to the fixed point. Edge parity is evaluated in the
  // current forest; each removal is logged for the merge phase.
  s.kept_edges = s.tree_edges;
  auto side_vertices = [&](const std::vector<int>& kept, int skip_edge,
                           int start_comp) {
    std::vector<char> vis(nc, 0);
    std::vector<int> stack{start_comp};
    vis[start_comp] = 1;
    int count = 0;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      count += static_cast<int>(f.comps[c].vertices.size());
      for (int e : kept) {
        if (e == skip_edge) continue;
        int cu = f.comp_of[g.edge(e).u], cv = f.comp_of[g.edge(e).v];
        int other = -1;
        if (cu == c) other = cv;
        if (cv == c) other = cu;
        if (other != -1 && !vis[other]) {
          vis[other] = 1;
          stack.push_back(other);
        }
      }
    }
    return count;
  };
  bool removed = true;
  while (removed) {
    removed = false;
    for (size_t i = 0; i < s.kept_edges.size(); ++i) {
      int e = s.kept_edges[i];
      int side = side_vertices(s.kept_edges, e, f.comp_of[g.edge(e).u]);
      int whole = side_vertices(s.kept_edges, -1, f.comp_of[g.edge(e).u]);
      if (side % 2 == 0) {
        // Both halves of the split must come out even.
        if ((whole - side) % 2 != 0)
          throw StructureViolation("even edge split off an odd s-subgraph");
        s.removed_even.push_back(e);
        s.kept_edges.erase(s.kept_edges.begin() + i);
        removed = true;
        break;
      }
    }
  }

  // pes-subgraphs: components of the remaining forest.
  DSU pes_dsu(nc);
  for (int e : s.kept_edges)
    pes_dsu.unite(f.comp_of[g.edge(e).u], f.comp_of[g.edge(e).v]);
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < nc; ++c) groups[pes_dsu.find(c)].push_back(c);
  for (auto& [root, comps] : groups) s.pes_comps.push_back(comps);
  return s;
}

namespace {

struct PegsCtx {
  const CubicMultigraph& g;
  const FactorDecomposition& f;
  // per component: (kept s-edge, neighbor component)
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<char> is_critical;
  std::vector<char> kept;  // per edge id: kept s-edge?
  CheckDepth depth;
  ConstructionStats* stats;
};

void flip_colors(std::vector<uint8_t>& color, const std::vector<int>& verts) {
  for (int v : verts) color[v] = static_cast<uint8_t>(3 - color[v]);
}

int delta_of(const std::vector<uint8_t>& color, const std::vector<int>& verts) {
  int d = 0;
  for (int v : verts) d += (color[v] == 2) ? 1 : -1;
  return d;
}

struct Limb {
  int edge;
  int heel;
  int pos = 0;
  bool is_stem;
  std::vector<int> top;  // K_j
};

// Full d(A) >= Delta(A) enumeration over the edge set of T.
bool check_subsets_full(const PegsCtx& ctx, const std::vector<int>& tverts,
                        const std::vector<uint8_t>& color) {
  std::vector<int> vs = tverts;
  std::sort(vs.begin(), vs.end());
  int tn = static_cast<int>(vs.size());
  std::vector<char> in_t(ctx.g.n(), 0);
  for (int v : vs) in_t[v] = 1;
  std::vector<std::pair<int, int>> tedges;
  for (int e = 0; e < ctx.g.edge_count(); ++e) {
    if (!(ctx.f.in_factor[e] || ctx.kept[e])) continue;
    const Edge& ge = ctx.g.edge(e);
    if (in_t[ge.u] && in_t[ge.v]) tedges.push_back({ge.u, ge.v});
  }
  std::vector<int> idx(ctx.g.n(), -1);
  for (int i = 0; i < tn; ++i) idx[vs[i]] = i;
  for (uint64_t bits = 1; bits + 1 < (uint64_t(1) << tn); ++bits) {
    int d = 0, del = 0;
    for (const auto& [u, v] : tedges)
      if (((bits >> idx[u]) & 1) != ((bits >> idx[v]) & 1)) ++d;
    for (int i = 0; i < tn; ++i)
      if ((bits >> i) & 1) del += (color[vs[i]] == 2) ? 1 : -1;
    if (d < std::abs(del)) return false;
  }
  return true;
}

// Interval form of the cut check: sets built from consecutive base
// positions, each expanded with the complete limbs heeled there. Splitting
// into intervals is exact because cuts and imbalances add up per interval.
bool check_intervals(const PegsCtx& ctx, const std::vector<int>& order,
                     const std::vector<Limb>& limbs,
                     const std::vector<int>& tverts,
                     const std::vector<uint8_t>& color) {
  int k = static_cast<int>(order.size());
  std::vector<std::vector<int>> p(k);
  for (int i = 0; i < k; ++i) p[i].push_back(order[i]);
  for (const Limb& l : limbs)
    for (int v : l.top) p[l.pos - 1].push_back(v);
  std::vector<char> in_t(ctx.g.n(), 0);
  for (int v : tverts) in_t[v] = 1;
  std::vector<std::pair<int, int>> tedges;
  for (int e = 0; e < ctx.g.edge_count(); ++e) {
    if (!(ctx.f.in_factor[e] || ctx.kept[e])) continue;
    const Edge& ge = ctx.g.edge(e);
    if (in_t[ge.u] && in_t[ge.v]) tedges.push_back({ge.u, ge.v});
  }
  for (int il = 0; il < k; ++il) {
    std::vector<char> in_a(ctx.g.n(), 0);
    int del = 0;
    for (int ir = il; ir < k; ++ir) {
      for (int v : p[ir]) {
        in_a[v] = 1;
        del += (color[v] == 2) ? 1 : -1;
      }
      int d = 0;
      for (const auto& [u, v] : tedges)
        if (in_a[u] != in_a[v]) ++d;
      if (d < std::abs(del)) return false;
    }
  }
  return true;
}

// Recursive valid coloring of the pegs-subgraph rooted at comp. Returns the
// vertex set of the subgraph (including, for a branch, the vertex below the
// stem). Writes colors in place.
std::vector<int> color_pegs_node(PegsCtx& ctx, int comp, int stem_edge,
                                 int below_vertex,
                                 std::vector<uint8_t>& color) {
  const FactorComponent& base = ctx.f.comps[comp];
  std::vector<int> order = base.vertices;
  int k = static_cast<int>(order.size());

  std::vector<Limb> limbs;
  for (const auto& [e, other] : ctx.adj[comp]) {
    if (e == stem_edge) continue;
    int heel = ctx.f.comp_of[ctx.g.edge(e).u] == comp ? ctx.g.edge(e).u
                                                      : ctx.g.edge(e).v;
    Limb l;
    l.edge = e;
    l.heel = heel;
    l.is_stem = false;
    l.top = color_pegs_node(ctx, other, e, heel, color);
    // The child's set includes the heel; the top K_j excludes it.
    l.top.erase(std::remove(l.top.begin(), l.top.end(), heel), l.top.end());
    limbs.push_back(std::move(l));
  }
  if (stem_edge != -1) {
    Limb l;
    l.edge = stem_edge;
    l.heel = ctx.f.comp_of[ctx.g.edge(stem_edge).u] == comp
                 ? ctx.g.edge(stem_edge).u
                 : ctx.g.edge(stem_edge).v;
    l.is_stem = true;
    l.top = {below_vertex};
    color[below_vertex] = 1;
    limbs.push_back(std::move(l));
  }

  auto position_limbs = [&]() {
    std::vector<int> pos_of(ctx.g.n(), 0);
    for (int i = 0; i < k; ++i) pos_of[order[i]] = i + 1;
    for (Limb& l : limbs) l.pos = pos_of[l.heel];
    std::stable_sort(limbs.begin(), limbs.end(),
                     [](const Limb& a, const Limb& b) {
                       return std::tie(a.pos, a.edge) < std::tie(b.pos, b.edge);
                     });
  };
  position_limbs();
  int m = static_cast<int>(limbs.size());

  if ((m - k) % 2 != 0)
    throw StructureViolation("limb count parity differs from base order");
  ++ctx.stats->limb_parity_checks;

  // Bi-critical: odd-cycle base whose both externals carry critical edges
  // present in this subgraph.
  bool bicritical = false;
  if (base.kind == CompKind::OddCycle) {
    auto critical_limb_at = [&](int v) -> int {
      for (int i = 0; i < m; ++i)
        if (limbs[i].heel == v && ctx.is_critical[limbs[i].edge]) return i;
      return -1;
    };
    int at_front = critical_limb_at(order.front());
    int at_back = critical_limb_at(order.back());
    bicritical = at_front != -1 && at_back != -1;
    if (bicritical && limbs[at_front].is_stem) {
      std::reverse(order.begin(), order.end());
      position_limbs();
    }
  }

  auto top_color = [&](const Limb& l) -> int {
    int d = delta_of(color, l.top);
    if (d != 1 && d != -1)
      throw StructureViolation("limb top with |delta| != 1");
    return d == 1 ? 2 : 1;
  };
  auto set_top_color = [&](Limb& l, int want) {
    if (top_color(l) != want) flip_colors(color, l.top);
  };

  if (!bicritical) {
    for (int j = 1; j <= m; ++j)
      set_top_color(limbs[j - 1], (j % 2 == 1) ? 2 : 1);  // counter-parity
  } else {
    Limb& first = limbs[0];
    if (first.heel != order.front() || first.is_stem ||
        !ctx.is_critical[first.edge])
      throw StructureViolation("bi-critical base without its critical limb first");
    int x = ctx.g.other_end(first.edge, order.front());
    for (int j = 2; j <= m - 1; ++j)
      set_top_color(limbs[j - 1], (j % 2 == 1) ? 1 : 2);  // parity
    if (color[x] != 2) flip_colors(color, first.top);
    int t1 = top_color(first);
    set_top_color(limbs[m - 1], 3 - t1);
  }

  // Base vertices take their parity colors.
  for (int i = 1; i <= k; ++i)
    color[order[i - 1]] = (i % 2 == 1) ? 1 : 2;

  if (bicritical) {
    int v1 = order.front();
    int x = ctx.g.other_end(limbs[0].edge, v1);
    if (color[v1] == color[x])
      throw StructureViolation("rule violated: no bichromatic critical edge");
    ++ctx.stats->critical_edge_checks;
  }

  std::vector<int> tverts = order;
  for (const Limb& l : limbs)
    tverts.insert(tverts.end(), l.top.begin(), l.top.end());

  if (delta_of(color, tverts) != 0)
    throw StructureViolation("pegs coloring is not a bisection");

  if (ctx.depth == CheckDepth::debug) {
    bool interval_ok = check_intervals(ctx, order, limbs, tverts, color);
    ++ctx.stats->interval_checks;
    if (static_cast<int>(tverts.size()) <= 16) {
      bool full_ok = check_subsets_full(ctx, tverts, color);
      if (full_ok != interval_ok)
        throw StructureViolation("interval check disagrees with enumeration");
      ++ctx.stats->interval_full_agreements;
      if (!full_ok)
        throw StructureViolation("pegs coloring not orientable (enumeration)");
    }
    if (!interval_ok)
      throw StructureViolation("pegs coloring not orientable (intervals)");
  }
  return tverts;
}

}  // namespace

std::vector<uint8_t> color_pes(const CubicMultigraph& g,
                               const FactorDecomposition& f,
                               const SkeletalStructure& s, int pes_index,
                               CheckDepth depth, ConstructionStats& stats) {
  PegsCtx ctx{g, f, {}, {}, {}, depth, &stats};
  ctx.adj.resize(f.comps.size());
  ctx.kept.assign(g.edge_count(), 0);
  for (int e : s.kept_edges) {
    ctx.kept[e] = 1;
    int cu = f.comp_of[g.edge(e).u], cv = f.comp_of[g.edge(e).v];
    ctx.adj[cu].push_back({e, cv});
    ctx.adj[cv].push_back({e, cu});
  }
  ctx.is_critical.assign(g.edge_count(), 0);
  for (int e : f.critical_edges) ctx.is_critical[e] = 1;

  const std::vector<int>& comps = s.pes_comps[pes_index];
  // Root: component containing the smallest vertex id of the subgraph.
  int root = comps.front();
  int best_v = g.n();
  for (int c : comps)
    for (int v : f.comps[c].vertices)
      if (v < best_v) {
        best_v = v;
        root = c;
      }
  // The kept edges form a tree, so excluding the stem edge on each call is
  // enough to orient the recursion away from the root.
  std::vector<uint8_t> color(g.n(), 0);
  color_pegs_node(ctx, root, -1, -1, color);
  return color;
}

Bisection merge_colorings(const CubicMultigraph& g,
                          const FactorDecomposition& f,
                          const SkeletalStructure& s,
                          const std::vector<std::vector<uint8_t>>& per_pes,
                          ConstructionStats& stats) {
  std::vector<uint8_t> color(g.n(), 0);
  for (size_t pi = 0; pi < s.pes_comps.size(); ++pi)
    for (int c : s.pes_comps[pi])
      for (int v : f.comps[c].vertices) {
        if (per_pes[pi][v] != 1 && per_pes[pi][v] != 2)
          throw StructureViolation("pes coloring missing a vertex");
        color[v] = per_pes[pi][v];
      }

  std::vector<char> is_critical(g.edge_count(), 0);
  for (int e : f.critical_edges) is_critical[e] = 1;

  // Union-find over vertices of the evolving structure.
  DSU dsu(g.n());
  for (const FactorComponent& c : f.comps)
    for (size_t i = 1; i < c.vertices.size(); ++i)
      dsu.unite(c.vertices[0], c.vertices[i]);
  for (int e : s.kept_edges) dsu.unite(g.edge(e).u, g.edge(e).v);

  for (auto it = s.removed_even.rbegin(); it != s.removed_even.rend(); ++it) {
    int e = *it;
    int u = g.edge(e).u, v = g.edge(e).v;
    if (dsu.find(u) == dsu.find(v))
      throw StructureViolation("reinserted edge inside one side");
    if (is_critical[e] && color[u] == color[v]) {
      // Flip the side holding the larger endpoint; either side is even.
      int side = dsu.find(std::max(u, v));
      std::vector<int> members;
      for (int w = 0; w < g.n(); ++w)
        if (dsu.find(w) == side) members.push_back(w);
      if (members.size() % 2 != 0)
        throw StructureViolation("odd side during merge");
      flip_colors(color, members);
      ++stats.merge_flips;
    }
    dsu.unite(u, v);
  }
  Bisection bis{color};
  if (!bis.balanced()) throw StructureViolation("merged coloring unbalanced");
  return bis;
}

namespace {

struct SubGraphView {
  CubicMultigraph sub;
  std::vector<int> vmap;  // sub vertex -> global vertex
  std::vector<int> emap;  // sub edge -> global edge
};

std::vector<SubGraphView> split_into_components(const CubicMultigraph& g) {
  auto comp = g.components();
  int nc = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<SubGraphView> out;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> vmap;
    std::vector<int> local(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
      if (comp[v] == c) {
        local[v] = static_cast<int>(vmap.size());
        vmap.push_back(v);
      }
    std::vector<Edge> edges;
    std::vector<int> emap;
    for (int e = 0; e < g.edge_count(); ++e)
      if (comp[g.edge(e).u] == c) {
        edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
        emap.push_back(e);
      }
    out.push_back({CubicMultigraph(static_cast<int>(vmap.size()), std::move(edges)),
                   std::move(vmap), std::move(emap)});
  }
  return out;
}

FactorDecomposition remap_factor(const FactorDecomposition& f,
                                 const SubGraphView& view, int global_n,
                                 int global_m) {
  FactorDecomposition out;
  out.comp_of.assign(global_n, -1);
  out.in_factor.assign(global_m, 0);
  for (const FactorComponent& c : f.comps) {
    FactorComponent gc;
    gc.kind = c.kind;
    for (int v : c.vertices) gc.vertices.push_back(view.vmap[v]);
    for (int e : c.edges) gc.edges.push_back(view.emap[e]);
    out.comps.push_back(std::move(gc));
  }
  for (size_t v = 0; v < view.vmap.size(); ++v)
    out.comp_of[view.vmap[v]] = f.comp_of[v];
  for (size_t e = 0; e < view.emap.size(); ++e)
    out.in_factor[view.emap[e]] = f.in_factor[e];
  for (int e : f.critical_edges) out.critical_edges.push_back(view.emap[e]);
  std::sort(out.critical_edges.begin(), out.critical_edges.end());
  return out;
}

SkeletalStructure remap_skeletal(const SkeletalStructure& s,
                                 const SubGraphView& view) {
  SkeletalStructure out;
  for (int e : s.tree_edges) out.tree_edges.push_back(view.emap[e]);
  for (int e : s.removed_even) out.removed_even.push_back(view.emap[e]);
  for (int e : s.kept_edges) out.kept_edges.push_back(view.emap[e]);
  out.pes_comps = s.pes_comps;
  return out;
}

}  // namespace

Weak5Certificate construct_orientable_5weak(const CubicMultigraph& g,
                                            CheckDepth depth) {
  Weak5Certificate cert;
  std::vector<uint8_t> color(g.n(), 0);

  for (const SubGraphView& view : split_into_components(g)) {
    auto factor = find_factor(view.sub);
    if (!factor) {
      ++cert.stats.fallbacks;
      cert.used_fallback = true;
      auto bis = find_k_weak(view.sub, 5, true);
      if (!bis)
        throw InternalVerificationFailed(
            "no factor and no direct orientable 5-weak bisection");
      for (size_t v = 0; v < view.vmap.size(); ++v)
        color[view.vmap[v]] = bis->color[v];
      continue;
    }
    auto violations = check_factor(view.sub, *factor);
    if (!violations.empty())
      throw InternalVerificationFailed("factor search returned an invalid factor: " +
                                       violations.front());
    SkeletalStructure skel = build_skeletal(view.sub, *factor);
    // Both sides of every removal were verified even inside build_skeletal;
    // every pes-subgraph must be even as well.
    cert.stats.even_split_checks += static_cast<long>(skel.removed_even.size());
    for (const auto& comps : skel.pes_comps) {
      int sz = 0;
      for (int c : comps) sz += static_cast<int>((*factor).comps[c].vertices.size());
      if (sz % 2 != 0)
        throw StructureViolation("odd pes-subgraph");
      ++cert.stats.even_split_checks;
    }
    std::vector<std::vector<uint8_t>> per_pes;
    for (size_t pi = 0; pi < skel.pes_comps.size(); ++pi)
      per_pes.push_back(color_pes(view.sub, *factor, skel,
                                  static_cast<int>(pi), depth, cert.stats));
    Bisection sub_bis = merge_colorings(view.sub, *factor, skel, per_pes,
                                        cert.stats);
    for (size_t v = 0; v < view.vmap.size(); ++v)
      color[view.vmap[v]] = sub_bis.color[v];
    cert.factors.push_back(remap_factor(*factor, view, g.n(), g.edge_count()));
    cert.skeletals.push_back(remap_skeletal(skel, view));
  }

  cert.bisection = Bisection{std::move(color)};
  auto [weak_ok, rep] = is_k_weak(g, cert.bisection, 5);
  if (!weak_ok)
    throw InternalVerificationFailed("constructed bisection is not 5-weak");
  auto orient_cert = check_orientable(g, cert.bisection);
  if (!orient_cert.orientable())
    throw InternalVerificationFailed("constructed bisection is not orientable");
  cert.orientation = std::move(*orient_cert.orientation);

  FlowPoint target(Rat(7, 2), Rat(1, 2));
  auto net = excess_collector_network(g, cert.orientation, target);
  auto res = feasible_circulation(net);
  auto* vals = std::get_if<std::vector<Rat>>(&res);
  if (!vals)
    throw InternalVerificationFailed("no (7/2, 1/2)-flow on the witness orientation");
  cert.flow_values.assign(vals->begin(), vals->begin() + g.edge_count());
  FlowAssignment fa{cert.orientation, cert.flow_values};
  if (!verify_flow(g, fa, target).ok)
    throw InternalVerificationFailed("flow witness fails exact verification");
  return cert;
}

}  // namespace beflow
