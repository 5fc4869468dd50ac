#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beflow/flow.hpp"
#include "beflow/graph.hpp"
#include "beflow/orientation.hpp"
#include "beflow/rational.hpp"

namespace beflow {

/// tr(r, alpha) = (r - 2 alpha) / (1 - alpha). Undefined at alpha >= 1.
Rat trace_of(const FlowPoint& p);

/// The constraint alpha >= a - b r contributed by a vertex set.
struct HalfPlane {
  Rat a, b;
  VertexSet from;
};

struct Window {
  Rat r_lo{2}, r_hi{8};
  Rat alpha_lo{0}, alpha_hi{1};
};

/// One vertex of a Pareto frontier. The witness bisection applies to the
/// frontier segment to the right of the vertex (for the last vertex, to the
/// horizontal ray). Binding sets are the subsets whose half-planes meet at
/// the vertex; synthesized crossing points of a union carry none.
struct FrontierPoint {
  Rat r, alpha;
  std::optional<Bisection> witness;
  std::vector<VertexSet> binding;
};

/// Upward-closed region of the r-alpha plane, represented by the exact
/// rational Pareto frontier: vertices with r strictly increasing and alpha
/// strictly decreasing, a vertical ray above the first vertex at r = 2 and a
/// horizontal ray to the right of the last.
struct FlowRegion {
  Window window;
  std::vector<FrontierPoint> frontier;
  Rat alpha_min{0}, r_min{2};
};

/// Exact membership. Points with alpha >= 1 are always inside; r < 2 never.
bool region_contains(const FlowRegion& reg, const FlowPoint& p);

/// Frontier value at r (the least feasible alpha). r must be >= 2.
Rat frontier_alpha(const FlowRegion& reg, const Rat& r);

bool region_subset(const FlowRegion& a, const FlowRegion& b);
bool region_equal(const FlowRegion& a, const FlowRegion& b);

/// Minimum of the trace over the region; attained at a frontier vertex.
/// Throws EmptyBelowOne if no frontier point lies below alpha = 1.
Rat min_trace(const FlowRegion& reg);

/// bed of one orientable bisection: the upper envelope of the Condition-2
/// half-planes over all nonempty vertex subsets. Throws NotOrientable.
FlowRegion bed_of_bisection(const CubicMultigraph& g, const Bisection& bis,
                            const Window& window = {}, int max_n = 20);

/// bed of the graph: pointwise minimum over all orientable bisections, each
/// frontier segment tagged with a witness bisection.
FlowRegion bed_of_graph(const CubicMultigraph& g, const Window& window = {},
                        int max_n = 14);

/// Named parts of the r-alpha plane from the strength-poset analysis.
struct NamedRegion {
  enum class Kind { Lk, Mk, Ak, Urd };
  Kind kind;
  int k = 0;                       // for Lk / Mk / Ak (k >= 3)
  std::optional<FlowPoint> anchor; // for Urd
};

NamedRegion named_region(NamedRegion::Kind kind, int k);
NamedRegion named_urd(const FlowPoint& p);

/// The endpoint (3 + (k-3)/(k-1), (k-3)/(k-1)) of M_k.
FlowPoint mk_endpoint(int k);

/// urd(p) as a FlowRegion (frontier [(2,1), p]).
FlowRegion urd_region(const FlowPoint& p);

/// Membership with the definitions' open/closed boundary bookkeeping:
/// L_k excludes (2,1) and includes (k,0); A_k includes its lower and left
/// edges only.
bool named_contains(const NamedRegion& nr, const FlowPoint& p);

/// A bisection whose bed equals bed(G), if one is found among the
/// enumerated orientable bisections. Exploratory: no guarantee one exists.
std::optional<Bisection> dominant_orientation_search(const CubicMultigraph& g,
                                                     int max_n = 12);

}  // namespace beflow
