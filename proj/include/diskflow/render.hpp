#pragma once

#include <string>

#include "diskflow/model.hpp"

namespace diskflow {

/// Graphviz description of the distinguishing tree. Root drawn as a double
/// circle, red edges for color -1, primed edges labelled with a prime.
std::string tree_to_dot(const DistinguishedGraph& g);

/// SVG 1.1 drawing of the separatrix diagram: one loop per non-root vertex
/// at the boundary base point, child loops nested inside their parent's.
/// Elements carry class attributes `loop`, `arrow forward|reversed` and
/// `elliptic-dot`, and loops carry `data-vertex`/`data-parent`.
/// Throws ModelError when the graph is not realizable.
std::string diagram_to_svg(const DistinguishedGraph& g);

}  // namespace diskflow
