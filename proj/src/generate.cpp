#include "beflow/generate.hpp"

#include <algorithm>
#include <map>

#include "beflow/canonical.hpp"

namespace beflow {

namespace {

CubicMultigraph theta() {
  return CubicMultigraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

// Subdivide edges e1 != e2 and join the two new vertices.
CubicMultigraph insert_on_pair(const CubicMultigraph& g, int e1, int e2) {
  int x = g.n(), y = g.n() + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 3);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& uv = g.edge(e);
    if (e == e1) {
      edges.push_back({uv.u, x});
      edges.push_back({x, uv.v});
    } else if (e == e2) {
      edges.push_back({uv.u, y});
      edges.push_back({y, uv.v});
    } else {
      edges.push_back(uv);
    }
  }
  edges.push_back({x, y});
  return CubicMultigraph(g.n() + 2, std::move(edges));
}

// Subdivide one edge twice and join the two new vertices (creates a digon).
CubicMultigraph insert_digon(const CubicMultigraph& g, int e1) {
  int x = g.n(), y = g.n() + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 3);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& uv = g.edge(e);
    if (e == e1) {
      edges.push_back({uv.u, x});
      edges.push_back({x, y});
      edges.push_back({y, uv.v});
    } else {
      edges.push_back(uv);
    }
  }
  edges.push_back({x, y});
  return CubicMultigraph(g.n() + 2, std::move(edges));
}

// Subdivide an edge at c and attach a balloon (vertex a joined to a digon).
CubicMultigraph insert_balloon(const CubicMultigraph& g, int e1) {
  int c = g.n(), a = g.n() + 1, u = g.n() + 2, v = g.n() + 3;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 6);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& uv = g.edge(e);
    if (e == e1) {
      edges.push_back({uv.u, c});
      edges.push_back({c, uv.v});
    } else {
      edges.push_back(uv);
    }
  }
  edges.push_back({c, a});
  edges.push_back({a, u});
  edges.push_back({a, v});
  edges.push_back({u, v});
  edges.push_back({u, v});
  return CubicMultigraph(g.n() + 4, std::move(edges));
}

std::vector<CubicMultigraph> level(int n);

std::vector<CubicMultigraph> build_level(int n) {
  std::map<std::string, CubicMultigraph> seen;
  auto take = [&](CubicMultigraph g) {
    std::string key = canonical_form(g);
    seen.emplace(std::move(key), std::move(g));
  };
  if (n == 2) {
    take(theta());
  } else {
    for (const CubicMultigraph& p : level(n - 2)) {
      for (int e1 = 0; e1 < p.edge_count(); ++e1) {
        take(insert_digon(p, e1));
        for (int e2 = e1 + 1; e2 < p.edge_count(); ++e2)
          take(insert_on_pair(p, e1, e2));
      }
    }
    if (n >= 6) {
      for (const CubicMultigraph& p : level(n - 4))
        for (int e1 = 0; e1 < p.edge_count(); ++e1)
          take(insert_balloon(p, e1));
    }
  }
  std::vector<CubicMultigraph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

// Levels are memoized: sweeps ask for consecutive sizes.
std::vector<CubicMultigraph> level(int n) {
  static std::map<int, std::vector<CubicMultigraph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto v = build_level(n);
  cache[n] = v;
  return v;
}

}  // namespace

std::vector<CubicMultigraph> generate_cubic(int n, bool allow_parallel) {
  if (n <= 0 || n % 2 != 0) throw OddN("n must be positive and even");
  std::vector<CubicMultigraph> out;
  for (const CubicMultigraph& g : level(n))
    if (allow_parallel || g.is_simple()) out.push_back(g);
  return out;
}

}  // namespace beflow
