#pragma once

#include <string>
#include <vector>

#include "beflow/graph.hpp"
#include "beflow/orientation.hpp"

namespace beflow::testing {

inline CubicMultigraph theta() {
  return CubicMultigraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

inline CubicMultigraph k4() {
  return CubicMultigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Two digon pairs joined in a 4-cycle.
inline CubicMultigraph necklace4() {
  return CubicMultigraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
}

inline CubicMultigraph k33() {
  return CubicMultigraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                             {2, 3}, {2, 4}, {2, 5}});
}

inline CubicMultigraph prism() {
  return CubicMultigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                             {0, 3}, {1, 4}, {2, 5}});
}

inline CubicMultigraph petersen() {
  return CubicMultigraph(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // outer cycle
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},   // spokes
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}); // inner pentagram
}

// Two balloons (digon + triangle gadget) joined by a bridge: vertices
// 0,1 digon with apex 2; 3,4 digon with apex 5; bridge 2-5.
inline CubicMultigraph dumbbell() {
  return CubicMultigraph(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 4},
                             {3, 5}, {4, 5}, {2, 5}});
}

// Two K4-with-a-subdivided-edge gadgets joined by a bridge (10 vertices).
inline CubicMultigraph bridged_k4_pair() {
  return CubicMultigraph(
      10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
           {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
           {4, 9}});
}

// Independent orientability oracle: d(A) >= Delta(A) over all subsets.
inline bool orientable_by_subsets(const CubicMultigraph& g, const Bisection& bis) {
  for (uint64_t bits = 1; bits < (uint64_t(1) << g.n()); ++bits) {
    VertexSet a{bits};
    if (cut_degree(g, a) < Delta(bis, a)) return false;
  }
  return true;
}

// Independent bridge oracle: remove each edge, test connectivity by BFS.
inline std::vector<int> bridges_by_removal(const CubicMultigraph& g) {
  std::vector<int> out;
  for (int skip = 0; skip < g.edge_count(); ++skip) {
    std::vector<std::vector<int>> adj(g.n());
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e == skip) continue;
      adj[g.edge(e).u].push_back(g.edge(e).v);
      adj[g.edge(e).v].push_back(g.edge(e).u);
    }
    // connectivity of the skipped edge's endpoints
    std::vector<char> vis(g.n(), 0);
    std::vector<int> stack{g.edge(skip).u};
    vis[g.edge(skip).u] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
    }
    if (!vis[g.edge(skip).v]) out.push_back(skip);
  }
  return out;
}

// All bisections up to the global swap (color of vertex 0 fixed to 1).
inline std::vector<Bisection> all_bisections(const CubicMultigraph& g) {
  std::vector<Bisection> out;
  int n = g.n();
  for (uint64_t mask = 0; mask < (uint64_t(1) << (n - 1)); ++mask) {
    if (__builtin_popcountll(mask) != n / 2) continue;
    Bisection bis;
    bis.color.resize(n);
    bis.color[0] = 1;
    for (int v = 1; v < n; ++v)
      bis.color[v] = ((mask >> (v - 1)) & 1) ? 2 : 1;
    out.push_back(std::move(bis));
  }
  return out;
}

// Exhaustive labeled enumeration of connected cubic multigraphs, deduped by
// a caller-supplied canonical form. Independent of the generator under test.
template <typename CanonFn>
inline std::vector<CubicMultigraph> enumerate_by_matrix(int n, CanonFn canon) {
  std::vector<CubicMultigraph> out;
  std::vector<std::string> seen;
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<int> mult(pairs.size(), 0);

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == pairs.size()) {
      for (int v = 0; v < n; ++v)
        if (deg[v] != 3) return;
      std::vector<Edge> edges;
      for (size_t p = 0; p < pairs.size(); ++p)
        for (int c = 0; c < mult[p]; ++c)
          edges.push_back({pairs[p].first, pairs[p].second});
      CubicMultigraph g(n, std::move(edges));
      if (!g.is_connected()) return;
      std::string key = canon(g);
      for (const auto& s : seen)
        if (s == key) return;
      seen.push_back(key);
      out.push_back(std::move(g));
      return;
    }
    auto [i, j] = pairs[idx];
    for (int m = 0; m <= 3; ++m) {
      if (deg[i] + m > 3 || deg[j] + m > 3) break;
      mult[idx] = m;
      deg[i] += m;
      deg[j] += m;
      // enough remaining slots to finish vertex i?
      bool ok = true;
      if (j == n - 1 && deg[i] != 3) ok = false;
      if (ok) self(self, idx + 1);
      deg[i] -= m;
      deg[j] -= m;
      mult[idx] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace beflow::testing
