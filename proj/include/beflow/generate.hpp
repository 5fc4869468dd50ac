#pragma once

#include <vector>

#include "beflow/graph.hpp"

namespace beflow {

/// All connected cubic multigraphs on n vertices, one representative per
/// isomorphism class, ordered by canonical form. With allow_parallel = false
/// only simple graphs are returned. Throws OddN for odd n.
///
/// Construction: level n is built from level n-2 by edge insertion
/// (subdivide two edge slots and join the new vertices; subdividing the same
/// edge twice creates a digon) and from level n-4 by balloon insertion
/// (subdivide an edge and hang a triangle-with-doubled-edge gadget on the
/// new vertex). Every connected cubic multigraph on >= 4 vertices reduces by
/// the inverse of one of the two operations, so the levels are exhaustive;
/// duplicates are removed by canonical form.
std::vector<CubicMultigraph> generate_cubic(int n, bool allow_parallel);

}  // namespace beflow
