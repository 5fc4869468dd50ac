#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beflow/graph.hpp"
#include "beflow/orientation.hpp"

namespace beflow {

struct MonoComponent {
  std::vector<int> vertices;
  int edge_count = 0;
  bool is_tree = false;
};

/// Monochromatic components of both color classes, with the k-weak
/// violators singled out.
struct MonochromaticReport {
  std::vector<MonoComponent> components;
  std::vector<int> violators;  // indices into components
};

/// True iff every monochromatic component is a tree on at most k-2
/// vertices. Parallel monochromatic edges form a 2-vertex cycle and are
/// caught by the edge count. Throws BadK for k < 3.
std::pair<bool, MonochromaticReport> is_k_weak(const CubicMultigraph& g,
                                               const Bisection& bis, int k);

struct SearchLimits {
  int backtrack_max_n = 24;
};

/// Backtracking search for a k-weak bisection (orientable on demand),
/// pruning on component size, cycles and unreachable balance. Returns the
/// first hit in a deterministic order, or nothing once the space is
/// exhausted.
std::optional<Bisection> find_k_weak(const CubicMultigraph& g, int k,
                                     bool require_orientable,
                                     const SearchLimits& limits = {});

enum class Conjecture { bl3, simple414 };

Conjecture parse_conjecture(const std::string& tag);

struct HuntRecord {
  std::string canonical;
  int n = 0;
  std::string verdict;  // "holds" | "skipped" | "counterexample"
  std::string detail;
  std::optional<Bisection> witness;
};

/// Sweeps a corpus against one of the open conjectures, producing one
/// record per graph. A counterexample is reported, never thrown.
std::vector<HuntRecord> hunt(const std::vector<CubicMultigraph>& corpus,
                             Conjecture which);

}  // namespace beflow
