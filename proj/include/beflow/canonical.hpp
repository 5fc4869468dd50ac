#pragma once

#include <string>

#include "beflow/graph.hpp"

namespace beflow {

/// Canonical form of a cubic multigraph: the lexicographically smallest
/// row-major upper-triangular multiplicity string over vertex relabelings,
/// found by equitable refinement plus individualization. Two graphs are
/// isomorphic iff their canonical forms are equal.
std::string canonical_form(const CubicMultigraph& g);

/// Reference implementation: minimum over all n! permutations. Only
/// sensible for small n; used as the oracle for canonical_form.
std::string canonical_form_brute(const CubicMultigraph& g);

bool isomorphic(const CubicMultigraph& a, const CubicMultigraph& b);

}  // namespace beflow
