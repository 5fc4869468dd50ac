#include "beflow/flow.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace beflow {

namespace {

// Residual network over Rat capacities.
struct ResidualNet {
  struct A {
    int to;
    Rat cap;
    int rev;
  };
  std::vector<std::vector<A>> adj;

  explicit ResidualNet(int n) : adj(n) {}

  void add(int from, int to, Rat cap) {
    adj[from].push_back({to, std::move(cap), static_cast<int>(adj[to].size())});
    adj[to].push_back({from, Rat(0), static_cast<int>(adj[from].size()) - 1});
  }

  // Edmonds-Karp. Returns total flow pushed from s to t.
  Rat max_flow(int s, int t) {
    Rat total(0);
    while (true) {
      std::vector<int> prev_node(adj.size(), -1), prev_arc(adj.size(), -1);
      std::queue<int> q;
      q.push(s);
      prev_node[s] = s;
      while (!q.empty() && prev_node[t] == -1) {
        int x = q.front();
        q.pop();
        for (size_t i = 0; i < adj[x].size(); ++i) {
          const A& a = adj[x][i];
          if (a.cap > Rat(0) && prev_node[a.to] == -1) {
            prev_node[a.to] = x;
            prev_arc[a.to] = static_cast<int>(i);
            q.push(a.to);
          }
        }
      }
      if (prev_node[t] == -1) return total;
      Rat push = Rat(0);
      bool first = true;
      for (int x = t; x != s; x = prev_node[x]) {
        const A& a = adj[prev_node[x]][prev_arc[x]];
        if (first || a.cap < push) push = a.cap;
        first = false;
      }
      for (int x = t; x != s; x = prev_node[x]) {
        A& a = adj[prev_node[x]][prev_arc[x]];
        a.cap -= push;
        adj[x][a.rev].cap += push;
      }
      total += push;
    }
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> vis(adj.size(), false);
    std::vector<int> stack{s};
    vis[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const A& a : adj[x])
        if (a.cap > Rat(0) && !vis[a.to]) {
          vis[a.to] = true;
          stack.push_back(a.to);
        }
    }
    return vis;
  }
};

}  // namespace

std::variant<std::vector<Rat>, ViolatingCut> feasible_circulation(
    const CirculationNetwork& net) {
  for (const Arc& a : net.arcs)
    if (a.lower > a.upper) throw BadBounds("arc with lower > upper");

  int nv = net.num_vertices;
  int s = nv, t = nv + 1;
  ResidualNet rn(nv + 2);
  std::vector<int> arc_pos(net.arcs.size());

  std::vector<Rat> b(nv, Rat(0));  // lower-bound surplus per vertex
  for (const Arc& a : net.arcs) {
    b[a.head] += a.lower;
    b[a.tail] -= a.lower;
  }
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    arc_pos[i] = static_cast<int>(rn.adj[a.tail].size());
    rn.add(a.tail, a.head, a.upper - a.lower);
  }
  Rat need(0);
  for (int v = 0; v < nv; ++v) {
    if (b[v] > Rat(0)) {
      rn.add(s, v, b[v]);
      need += b[v];
    } else if (b[v] < Rat(0)) {
      rn.add(v, t, -b[v]);
    }
  }

  Rat pushed = rn.max_flow(s, t);
  if (pushed == need) {
    std::vector<Rat> values;
    values.reserve(net.arcs.size());
    for (size_t i = 0; i < net.arcs.size(); ++i) {
      const Arc& a = net.arcs[i];
      const auto& ra = rn.adj[a.tail][arc_pos[i]];
      // flow on the arc = capacity consumed + lower bound
      values.push_back(a.lower + ((a.upper - a.lower) - ra.cap));
    }
    return values;
  }

  // The complement of the residual-reachable set violates
  // sum_{out of A} lower > sum_{into A} upper.
  std::vector<bool> vis = rn.reachable(s);
  VertexSet cut;
  for (int v = 0; v < nv; ++v)
    if (!vis[v]) cut.add(v);
  Rat lo(0), hi(0);
  for (const Arc& a : net.arcs) {
    bool tin = cut.contains(a.tail), hin = cut.contains(a.head);
    if (tin && !hin) lo += a.lower;
    if (!tin && hin) hi += a.upper;
  }
  if (!(lo > hi))
    throw InternalVerificationFailed("extracted cut does not violate (*)");
  return ViolatingCut{cut};
}

CirculationNetwork excess_collector_network(const CubicMultigraph& g,
                                            const Orientation& o,
                                            const FlowPoint& p) {
  CirculationNetwork net;
  net.num_vertices = g.n() + 1;
  int x = g.n();
  net.arcs.reserve(g.edge_count() + 2 * g.n());
  for (int e = 0; e < g.edge_count(); ++e)
    net.arcs.push_back({o.tail(g, e), o.head(g, e), Rat(1), p.r - Rat(1)});
  for (int v = 0; v < g.n(); ++v) {
    net.arcs.push_back({x, v, Rat(0), p.alpha});
    net.arcs.push_back({v, x, Rat(0), p.alpha});
  }
  return net;
}

namespace {

Rat condition2_bound(const CubicMultigraph& g, const Bisection& bis,
                     const VertexSet& a, const Rat& r) {
  Rat d(cut_degree(g, a));
  Rat dd(Delta(bis, a));
  Rat sz(a.size());
  return (Rat(2) * d - (d - dd) * r) / (Rat(2) * sz);
}

}  // namespace

std::variant<FlowAssignment, Infeasible> check_flow(const CubicMultigraph& g,
                                                    const FlowPoint& p,
                                                    int max_n) {
  if (p.alpha >= Rat(3))
    throw AlphaOutOfRange("alpha must be below 3, got " + p.alpha.str());
  if (p.alpha >= Rat(1)) {
    FlowAssignment fa;
    fa.orientation = balanced_orientation(g);
    fa.value.assign(g.edge_count(), Rat(1));
    return fa;
  }

  Infeasible inf;
  for (auto& [bis, orient] : enumerate_orientable_bisections(g, max_n)) {
    auto net = excess_collector_network(g, orient, p);
    auto res = feasible_circulation(net);
    if (auto* vals = std::get_if<std::vector<Rat>>(&res)) {
      FlowAssignment fa;
      fa.orientation = orient;
      fa.value.assign(vals->begin(), vals->begin() + g.edge_count());
      return fa;
    }
    // Map the network cut to a graph cut per the collector construction.
    VertexSet nset = std::get<ViolatingCut>(res).set;
    VertexSet a;
    if (nset.contains(g.n())) {
      nset.remove(g.n());
      a = nset.complement(g.n());
    } else {
      a = nset;
    }
    Rat bound = condition2_bound(g, bis, a, p.r);
    if (!(p.alpha < bound))
      throw InternalVerificationFailed("cut fails to certify infeasibility");
    inf.per_bisection.push_back({bis, a, bound});
  }
  return inf;
}

ExcessReport verify_flow(const CubicMultigraph& g, const FlowAssignment& fa,
                         const FlowPoint& p) {
  if (static_cast<int>(fa.value.size()) != g.edge_count() ||
      static_cast<int>(fa.orientation.flipped.size()) != g.edge_count())
    throw MismatchedGraph("assignment does not cover the graph");
  ExcessReport rep;
  rep.ok = true;
  for (int e = 0; e < g.edge_count(); ++e)
    if (fa.value[e] < Rat(1) || fa.value[e] > p.r - Rat(1)) {
      rep.bad_edges.push_back(e);
      rep.ok = false;
    }
  std::vector<Rat> net(g.n(), Rat(0));
  for (int e = 0; e < g.edge_count(); ++e) {
    net[fa.orientation.tail(g, e)] += fa.value[e];
    net[fa.orientation.head(g, e)] -= fa.value[e];
  }
  rep.excess.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) {
    rep.excess.push_back(abs(net[v]));
    if (rep.excess.back() > p.alpha) {
      rep.bad_vertices.push_back(v);
      rep.ok = false;
    }
  }
  return rep;
}

CutOracleResult cut_condition_oracle(const CubicMultigraph& g,
                                     const Bisection& bis, const FlowPoint& p,
                                     int max_n) {
  if (g.n() > max_n)
    throw TooLarge("subset enumeration capped at n = " + std::to_string(max_n));
  // Group subsets by (d, Delta, |A|); the bound depends only on the triple.
  std::map<std::tuple<int, int, int>, VertexSet> first_rep;
  uint64_t limit = uint64_t(1) << g.n();
  for (uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet a{bits};
    auto key = std::make_tuple(cut_degree(g, a), Delta(bis, a), a.size());
    first_rep.emplace(key, a);
  }
  CutOracleResult res;
  bool have = false;
  for (const auto& [key, a] : first_rep) {
    auto [d, dd, sz] = key;
    Rat bound = (Rat(2) * Rat(d) - (Rat(d) - Rat(dd)) * p.r) / Rat(2 * sz);
    if (!have || bound > res.worst_bound) {
      res.worst_bound = bound;
      res.worst = a;
      have = true;
    }
  }
  res.ok = p.alpha >= res.worst_bound;
  return res;
}

}  // namespace beflow
