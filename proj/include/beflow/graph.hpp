#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "beflow/errors.hpp"

namespace beflow {

/// Unordered endpoint pair of one edge instance. Parallel edges are distinct
/// entries in the edge list; an edge's identity is its positional index.
struct Edge {
  int u, v;
};

/// Subset of vertices as a bitmask. Graphs here never exceed a couple dozen
/// vertices, so 64 bits is plenty.
struct VertexSet {
  uint64_t bits = 0;

  static VertexSet single(int v) { return {uint64_t(1) << v}; }
  static VertexSet full(int n) {
    return {n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1};
  }
  bool contains(int v) const { return (bits >> v) & 1; }
  void add(int v) { bits |= uint64_t(1) << v; }
  void remove(int v) { bits &= ~(uint64_t(1) << v); }
  int size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  VertexSet complement(int n) const { return {full(n).bits & ~bits}; }

  std::vector<int> to_vector() const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Loopless multigraph in which every vertex has degree exactly 3.
class CubicMultigraph {
 public:
  /// Validates on construction: no loops, even n, every degree exactly 3.
  CubicMultigraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  /// The three incident edge ids of v, in increasing edge-index order.
  const std::array<int, 3>& incident(int v) const { return incident_[v]; }
  int other_end(int e, int v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  int multiplicity(int u, int v) const;
  bool is_simple() const;
  bool is_connected() const;
  /// Component id per vertex, ids dense from 0 in order of smallest member.
  std::vector<int> components() const;
  int component_count() const;

  /// "cub" text format: '#' comments, "n m" header, m lines "u v".
  static CubicMultigraph parse_cub(const std::string& text);
  std::string to_cub() const;

  /// graph6 (simple graphs only). Throws NotCubic if the decoded graph
  /// is not 3-regular.
  static CubicMultigraph from_graph6(const std::string& line);

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> incident_;
};

/// Number of edges with exactly one endpoint in a, counted with multiplicity.
int cut_degree(const CubicMultigraph& g, const VertexSet& a);

/// Edge ids whose removal disconnects their component. Parallel edges are
/// never bridges.
std::vector<int> bridges(const CubicMultigraph& g);

bool has_perfect_matching(const CubicMultigraph& g);

}  // namespace beflow
