#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beflow/flow.hpp"
#include "beflow/graph.hpp"
#include "beflow/orientation.hpp"
#include "beflow/rational.hpp"

namespace beflow {

enum class CompKind { Path, EvenCycle, OddCycle };

/// One component of the spanning factor F. Vertices are listed in component
/// order v1..vk; for paths and odd cycles v1 and vk are the external
/// vertices, for even cycles they are the endpoints of the chosen edge.
/// edges[i] joins vertices[i] and vertices[i+1]; cycles close with a final
/// edge joining vk and v1 (for odd cycles, the chosen simple edge).
struct FactorComponent {
  CompKind kind;
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct FactorDecomposition {
  std::vector<FactorComponent> comps;
  std::vector<int> comp_of;        // vertex -> component index
  std::vector<char> in_factor;     // per edge id
  std::vector<int> critical_edges; // edges from odd-cycle externals outward
};

/// Backtracking search for a spanning path/cycle factor satisfying the five
/// structural conditions. Throws NotConnected on disconnected input.
std::optional<FactorDecomposition> find_factor(const CubicMultigraph& g);

/// Empty iff the decomposition is a valid factor: spanning, components are
/// paths on >= 2 vertices or cycles, and the five conditions hold. Each
/// violation names the condition and the offending vertices or edges.
std::vector<std::string> check_factor(const CubicMultigraph& g,
                                      const FactorDecomposition& f);

/// The spanning structure S: the factor plus a set of skeletal edges that
/// contracts to a tree, after the even-edge removal loop.
struct SkeletalStructure {
  std::vector<int> tree_edges;    // E_X once the contraction is a tree
  std::vector<int> removed_even;  // removal log, in order
  std::vector<int> kept_edges;    // tree_edges minus removed_even
  std::vector<std::vector<int>> pes_comps;  // component ids per pes-subgraph
};

SkeletalStructure build_skeletal(const CubicMultigraph& g,
                                 const FactorDecomposition& f);

enum class CheckDepth { release, debug };

/// Counters for the construction-internal invariants; violations throw, so
/// a surviving run reports zeros.
struct ConstructionStats {
  long even_split_checks = 0;   // even decomposition after each removal
  long limb_parity_checks = 0;   // limb count parity at every node
  long critical_edge_checks = 0;    // bi-critical cycles with a bichromatic edge
  long interval_checks = 0;    // interval checks run
  long interval_full_agreements = 0;  // interval vs full enumeration
  long merge_flips = 0;      // even sides recolored to fix a critical edge
  long fallbacks = 0;
};

/// Colors one pes-subgraph by the recursive branch coloring. Exposed for
/// tests; construct_orientable_5weak drives it over all pes-subgraphs.
std::vector<uint8_t> color_pes(const CubicMultigraph& g,
                               const FactorDecomposition& f,
                               const SkeletalStructure& s, int pes_index,
                               CheckDepth depth, ConstructionStats& stats);

/// Reinserts the removed even edges in reverse order, flipping one even
/// side whenever a reinserted critical edge comes back monochromatic.
Bisection merge_colorings(const CubicMultigraph& g,
                          const FactorDecomposition& f,
                          const SkeletalStructure& s,
                          const std::vector<std::vector<uint8_t>>& per_pes,
                          ConstructionStats& stats);

struct Weak5Certificate {
  Bisection bisection;
  Orientation orientation;
  std::vector<Rat> flow_values;  // a (7/2, 1/2)-flow on the orientation
  bool used_fallback = false;
  ConstructionStats stats;
  // per connected component, in global vertex ids
  std::vector<FactorDecomposition> factors;
  std::vector<SkeletalStructure> skeletals;
};

/// The full pipeline: factor, skeletal structure, pes coloring, merge, then
/// verification (5-weak, orientable, and a concrete (7/2, 1/2)-flow).
/// Disconnected graphs are processed per component. Any failed internal
/// check throws InternalVerificationFailed.
Weak5Certificate construct_orientable_5weak(const CubicMultigraph& g,
                                            CheckDepth depth = CheckDepth::release);

}  // namespace beflow
