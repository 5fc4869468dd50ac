#include "beflow/orientation.hpp"

#include <algorithm>
#include <queue>

namespace beflow {

int outdegree(const CubicMultigraph& g, const Orientation& o, int v) {
  int d = 0;
  for (int e : g.incident(v)) d += (o.tail(g, e) == v);
  return d;
}

bool is_balanced(const CubicMultigraph& g, const Orientation& o) {
  for (int v = 0; v < g.n(); ++v) {
    int d = outdegree(g, o, v);
    if (d < 1 || d > 2) return false;
  }
  return true;
}

int delta(const Bisection& bis, const VertexSet& a) {
  int d = 0;
  for (size_t v = 0; v < bis.color.size(); ++v)
    if (a.contains(static_cast<int>(v))) d += (bis.color[v] == 2) ? 1 : -1;
  return d;
}

int Delta(const Bisection& bis, const VertexSet& a) {
  return std::abs(delta(bis, a));
}

namespace {

// Unit-capacity flow instance for the edge-to-tail matching: source, one
// node per vertex (capacity color(v)), one node per edge, sink.
struct MatchingNet {
  int nv, ne;
  int source, sink;
  // adjacency as (to, capacity, reverse index)
  struct A {
    int to, cap, rev;
  };
  std::vector<std::vector<A>> adj;

  MatchingNet(const CubicMultigraph& g, const Bisection& bis)
      : nv(g.n()), ne(g.edge_count()) {
    // node ids: 0..nv-1 vertices, nv..nv+ne-1 edges, then source, sink
    source = nv + ne;
    sink = nv + ne + 1;
    adj.resize(nv + ne + 2);
    for (int v = 0; v < nv; ++v) add(source, v, bis.color[v]);
    for (int e = 0; e < ne; ++e) {
      add(g.edge(e).u, nv + e, 2);  // capacity 2: never part of a min cut
      add(g.edge(e).v, nv + e, 2);
      add(nv + e, sink, 1);
    }
  }

  void add(int from, int to, int cap) {
    adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
  }

  // BFS augmenting paths; capacities are tiny integers.
  int max_flow() {
    int flow = 0;
    while (true) {
      std::vector<int> prev_node(adj.size(), -1), prev_arc(adj.size(), -1);
      std::queue<int> q;
      q.push(source);
      prev_node[source] = source;
      while (!q.empty() && prev_node[sink] == -1) {
        int x = q.front();
        q.pop();
        for (size_t i = 0; i < adj[x].size(); ++i) {
          const A& a = adj[x][i];
          if (a.cap > 0 && prev_node[a.to] == -1) {
            prev_node[a.to] = x;
            prev_arc[a.to] = static_cast<int>(i);
            q.push(a.to);
          }
        }
      }
      if (prev_node[sink] == -1) return flow;
      int x = sink;
      while (x != source) {
        int p = prev_node[x], i = prev_arc[x];
        adj[p][i].cap -= 1;
        adj[adj[p][i].to][adj[p][i].rev].cap += 1;
        x = p;
      }
      ++flow;
    }
  }

  VertexSet reachable_vertices() const {
    std::vector<bool> vis(adj.size(), false);
    std::vector<int> stack{source};
    vis[source] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const A& a : adj[x])
        if (a.cap > 0 && !vis[a.to]) {
          vis[a.to] = true;
          stack.push_back(a.to);
        }
    }
    VertexSet s;
    for (int v = 0; v < nv; ++v)
      if (vis[v]) s.add(v);
    return s;
  }
};

}  // namespace

OrientabilityCertificate check_orientable(const CubicMultigraph& g,
                                          const Bisection& bis) {
  if (static_cast<int>(bis.color.size()) != g.n())
    throw NotBisection("coloring size mismatch");
  for (uint8_t c : bis.color)
    if (c != 1 && c != 2) throw NotBisection("colors must be 1 or 2");
  if (!bis.balanced()) throw NotBisection("color classes differ in size");

  MatchingNet net(g, bis);
  int flow = net.max_flow();
  OrientabilityCertificate cert;
  if (flow == g.edge_count()) {
    Orientation o;
    o.flipped.assign(g.edge_count(), false);
    // The tail of e is the endpoint whose arc into e carries flow
    // (its residual capacity dropped below the initial 2).
    for (int v = 0; v < g.n(); ++v)
      for (const auto& a : net.adj[v])
        if (a.to >= g.n() && a.to < g.n() + g.edge_count() && a.cap < 2) {
          int e = a.to - g.n();
          o.flipped[e] = (g.edge(e).v == v);
        }
    cert.orientation = std::move(o);
  } else {
    // Residual-reachable vertices form a set with d(A) < delta(A).
    cert.violating = net.reachable_vertices();
  }
  return cert;
}

Orientation balanced_orientation(const CubicMultigraph& g) {
  // 4-regular multigraph H: the edges of g plus a virtual pairing edge
  // (2i, 2i+1) for each i. Adjacency as (neighbor, slot id); virtual edges
  // get slot ids past the real ones.
  int ne = g.edge_count();
  int total = ne + g.n() / 2;
  std::vector<std::vector<std::pair<int, int>>> adj(g.n());
  for (int e = 0; e < ne; ++e) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  for (int i = 0; i < g.n() / 2; ++i) {
    adj[2 * i].push_back({2 * i + 1, ne + i});
    adj[2 * i + 1].push_back({2 * i, ne + i});
  }
  std::vector<bool> used(total, false);
  std::vector<int> ptr(g.n(), 0);
  Orientation o;
  o.flipped.assign(ne, false);
  std::vector<bool> oriented(total, false);

  // Hierholzer per component of H; orient each traversed edge forward.
  for (int s = 0; s < g.n(); ++s) {
    if (ptr[s] >= static_cast<int>(adj[s].size())) continue;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      while (ptr[v] < static_cast<int>(adj[v].size()) &&
             used[adj[v][ptr[v]].second])
        ++ptr[v];
      if (ptr[v] == static_cast<int>(adj[v].size())) {
        stack.pop_back();
        continue;
      }
      auto [w, id] = adj[v][ptr[v]];
      used[id] = true;
      if (id < ne && !oriented[id]) {
        oriented[id] = true;
        o.flipped[id] = (g.edge(id).v == v);  // directed v -> w
      }
      stack.push_back(w);
    }
  }
  return o;
}

Bisection bisection_of(const CubicMultigraph& g, const Orientation& o) {
  Bisection b;
  b.color.resize(g.n());
  for (int v = 0; v < g.n(); ++v)
    b.color[v] = static_cast<uint8_t>(outdegree(g, o, v));
  return b;
}

std::vector<std::pair<Bisection, Orientation>> enumerate_orientable_bisections(
    const CubicMultigraph& g, int max_n) {
  if (g.n() > max_n)
    throw TooLarge("bisection enumeration capped at n = " +
                   std::to_string(max_n));
  std::vector<std::pair<Bisection, Orientation>> out;
  int n = g.n();
  // Fix color(0) = 1 to enumerate one representative per swap class.
  for (uint64_t mask = 0; mask < (uint64_t(1) << (n - 1)); ++mask) {
    if (__builtin_popcountll(mask) != n / 2) continue;
    Bisection bis;
    bis.color.resize(n);
    bis.color[0] = 1;
    for (int v = 1; v < n; ++v)
      bis.color[v] = ((mask >> (v - 1)) & 1) ? 2 : 1;
    auto cert = check_orientable(g, bis);
    if (cert.orientable())
      out.push_back({std::move(bis), std::move(*cert.orientation)});
  }
  return out;
}

}  // namespace beflow
