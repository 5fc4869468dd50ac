#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beflow/graph.hpp"

namespace beflow {

/// Direction per edge index: false means the edge is directed u -> v as
/// written in the edge list, true means v -> u.
struct Orientation {
  std::vector<bool> flipped;

  int tail(const CubicMultigraph& g, int e) const {
    return flipped[e] ? g.edge(e).v : g.edge(e).u;
  }
  int head(const CubicMultigraph& g, int e) const {
    return flipped[e] ? g.edge(e).u : g.edge(e).v;
  }
};

int outdegree(const CubicMultigraph& g, const Orientation& o, int v);
bool is_balanced(const CubicMultigraph& g, const Orientation& o);

/// Vertex 2-coloring with colors in {1, 2}. Equal color counts make it a
/// bisection; operations that require that check it explicitly.
struct Bisection {
  std::vector<uint8_t> color;  // values 1 or 2

  int count(int c) const {
    int k = 0;
    for (uint8_t x : color) k += (x == c);
    return k;
  }
  bool balanced() const { return count(1) == count(2); }
};

/// delta(A) = |V2 ∩ A| - |V1 ∩ A|.
int delta(const Bisection& bis, const VertexSet& a);
int Delta(const Bisection& bis, const VertexSet& a);

/// Outcome of the orientability test: either an orientation realizing
/// outdeg(v) = color(v) for every vertex, or a set A with d(A) < Delta(A).
struct OrientabilityCertificate {
  std::optional<Orientation> orientation;
  std::optional<VertexSet> violating;
  bool orientable() const { return orientation.has_value(); }
};

/// Decides whether outdeg(v) = color(v) is realizable, by matching edges to
/// tail vertices with a unit-capacity flow. Throws NotBisection if color
/// counts differ.
OrientabilityCertificate check_orientable(const CubicMultigraph& g,
                                          const Bisection& bis);

/// Some balanced orientation: pair the vertices with virtual edges, take an
/// Eulerian orientation of the resulting 4-regular multigraph, drop the
/// virtual edges. Always succeeds.
Orientation balanced_orientation(const CubicMultigraph& g);

/// All orientable bisections up to the global color swap (color of vertex 0
/// fixed to 1), each with a witness orientation. Throws TooLarge above
/// max_n.
std::vector<std::pair<Bisection, Orientation>> enumerate_orientable_bisections(
    const CubicMultigraph& g, int max_n = 14);

/// The bisection induced by a balanced orientation: color(v) = outdeg(v).
Bisection bisection_of(const CubicMultigraph& g, const Orientation& o);

}  // namespace beflow
