#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "beflow/graph.hpp"
#include "beflow/orientation.hpp"
#include "beflow/rational.hpp"

namespace beflow {

/// Point of the r-alpha plane. Exact rationals throughout; r >= 2 and
/// alpha >= 0 are enforced on construction.
struct FlowPoint {
  Rat r, alpha;

  FlowPoint(Rat rr, Rat aa) : r(std::move(rr)), alpha(std::move(aa)) {
    if (r < Rat(2) || alpha < Rat(0))
      throw MalformedInput("flow point needs r >= 2 and alpha >= 0");
  }
  friend bool operator==(const FlowPoint&, const FlowPoint&) = default;
};

/// Edge values on an orientation. Bounds 1 <= f(e) <= r-1 and per-vertex
/// excess <= alpha are what verify_flow checks.
struct FlowAssignment {
  Orientation orientation;
  std::vector<Rat> value;  // per edge index
};

struct Arc {
  int tail, head;
  Rat lower, upper;
};

/// Directed network with lower and upper capacities per arc.
struct CirculationNetwork {
  int num_vertices = 0;
  std::vector<Arc> arcs;
};

/// Set of network vertices violating the feasibility condition
/// sum of lower over outgoing <= sum of upper over incoming.
struct ViolatingCut {
  VertexSet set;
};

/// Exact feasible-circulation solver: lower bounds reduced to a max-flow
/// problem, solved with rational arithmetic. Returns per-arc values with
/// conservation at every vertex, or a violating cut. Throws BadBounds if
/// some arc has lower > upper.
std::variant<std::vector<Rat>, ViolatingCut> feasible_circulation(
    const CirculationNetwork& net);

/// The excess-collector network for g under the given orientation: original
/// arcs with bounds [1, r-1], plus antiparallel arcs between every vertex
/// and the collector (vertex index g.n()) with bounds [0, alpha].
CirculationNetwork excess_collector_network(const CubicMultigraph& g,
                                            const Orientation& o,
                                            const FlowPoint& p);

/// One violated cut inequality: alpha < (2 d(A) - (d(A)-Delta(A)) r) / (2|A|).
struct CutViolation {
  Bisection bisection;
  VertexSet set;
  Rat bound;  // the right-hand side above
};

struct Infeasible {
  std::vector<CutViolation> per_bisection;  // one entry per orientable bisection
};

/// Decides whether g admits an (r, alpha)-flow, iterating orientable
/// bisections and solving the collector network on a witness orientation of
/// each. alpha >= 1 short-circuits to the all-ones flow on a balanced
/// orientation. alpha >= 3 is rejected: past that bound an orientation need
/// not be balanced, and the bisection reduction no longer applies.
std::variant<FlowAssignment, Infeasible> check_flow(const CubicMultigraph& g,
                                                    const FlowPoint& p,
                                                    int max_n = 14);

struct ExcessReport {
  bool ok = false;
  std::vector<Rat> excess;              // |net flow| per vertex
  std::vector<int> bad_edges;           // value outside [1, r-1]
  std::vector<int> bad_vertices;        // excess above alpha
};

/// Exact re-check of a flow assignment against Definition 1's bounds.
ExcessReport verify_flow(const CubicMultigraph& g, const FlowAssignment& fa,
                         const FlowPoint& p);

struct CutOracleResult {
  bool ok = false;
  VertexSet worst;
  Rat worst_bound;
};

/// Independent oracle for Condition 2: enumerates all nonempty vertex
/// subsets and reports the one maximizing (2d - (d-Delta) r) / (2|A|).
/// Requires a bisection; orientability of it is the caller's business.
CutOracleResult cut_condition_oracle(const CubicMultigraph& g,
                                     const Bisection& bis, const FlowPoint& p,
                                     int max_n = 20);

}  // namespace beflow
