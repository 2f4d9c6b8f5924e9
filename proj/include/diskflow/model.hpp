#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace diskflow {

using VertexId = std::uint32_t;

/// Raised when a tree, graph or boundary violates its structural invariants.
class ModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Rooted tree with an ordered child list at every vertex.
///
/// Vertex ids follow level order: the root is 0 and reading the child lists of
/// vertices 0, 1, 2, ... in turn yields 1, 2, ..., n. This is exactly the order
/// in which code tokens are written, so token i always describes vertex i.
class PlaneRootedTree {
public:
  /// Single-vertex tree.
  PlaneRootedTree();

  /// Builds the tree whose level-order up-degree sequence is `up_degrees`.
  /// Throws ModelError unless the sequence describes exactly one tree.
  static PlaneRootedTree from_up_degrees(std::span<const std::uint32_t> up_degrees);

  /// Builds a tree from explicit child lists; ids must already be in level order.
  static PlaneRootedTree from_children(std::vector<std::vector<VertexId>> children);

  std::size_t vertex_count() const noexcept { return children_.size(); }
  std::size_t edge_count() const noexcept { return children_.size() - 1; }

  bool contains(VertexId v) const noexcept { return v < children_.size(); }
  std::optional<VertexId> parent(VertexId v) const;
  const std::vector<VertexId>& children(VertexId v) const;
  std::size_t up_degree(VertexId v) const { return children(v).size(); }
  /// Position of `v` among its parent's children (0-based); throws for the root.
  std::size_t child_index(VertexId v) const;
  std::size_t level(VertexId v) const;

  std::vector<std::uint32_t> up_degrees() const;

  friend bool operator==(const PlaneRootedTree&, const PlaneRootedTree&) = default;

private:
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> parent_;  // parent_[0] is unused
};

/// +1 (black): flow agrees with the orientation induced on the loop by the
/// plane. -1 (red): flow opposes it.
enum class EdgeColor : std::int8_t { black = 1, red = -1 };

constexpr int sign(EdgeColor c) noexcept { return static_cast<int>(c); }
constexpr EdgeColor opposite(EdgeColor c) noexcept {
  return c == EdgeColor::black ? EdgeColor::red : EdgeColor::black;
}
constexpr EdgeColor color_from_sign(int s) noexcept {
  return s > 0 ? EdgeColor::black : EdgeColor::red;
}

/// Plane rooted tree decorated with lower-edge colors and elliptic labels.
/// Entry 0 of both vectors belongs to the root and is fixed at (black, false).
struct DistinguishedGraph {
  PlaneRootedTree tree;
  std::vector<EdgeColor> lower_color;
  std::vector<bool> prime;

  /// Lower color of `v`, with the disk boundary counting as black for the root.
  EdgeColor effective_lower_color(VertexId v) const;

  friend bool operator==(const DistinguishedGraph&, const DistinguishedGraph&) = default;
};

/// Plain undecorated graph: every edge black, no primes.
DistinguishedGraph undecorated(PlaneRootedTree tree);

/// Returns a description of the first violated invariant, or nullopt.
/// Checks vector sizes, the unmarked root, and that each primed edge sits in a
/// cyclic cell with no primed sibling.
std::optional<std::string> graph_invariant_violation(const DistinguishedGraph& g);

/// Traversal directions around one cell. Index 0 is the lower side and
/// 1..n are the upper sides in canonical order; each entry is +1 or -1.
struct CellBoundary {
  std::vector<int> directions;

  explicit CellBoundary(std::vector<int> d);
  std::size_t side_count() const noexcept { return directions.size(); }
  std::size_t upper_count() const noexcept { return directions.size() - 1; }

  friend bool operator==(const CellBoundary&, const CellBoundary&) = default;
};

std::string to_string(const CellBoundary& b);

enum class CornerType { source, sink, hyperbolic, elliptic };
enum class CellKind { cyclic, polar, invalid };

std::string_view to_string(CornerType t) noexcept;
std::string_view to_string(CellKind k) noexcept;

/// Elliptic corner entered along side `elliptic_entry` (0 = lower side).
struct Cyclic {
  std::size_t elliptic_entry = 0;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};

/// Corner i lies between side i and side i+1 (cyclically).
struct Polar {
  std::size_t source_corner = 0;
  std::size_t sink_corner = 0;
  friend bool operator==(const Polar&, const Polar&) = default;
};

using CellConfiguration = std::variant<Cyclic, Polar>;

/// One admissible flow structure inside a cell together with the decorations
/// it induces on the upper edges.
struct CellOption {
  CellConfiguration config;
  std::vector<EdgeColor> child_colors;
  std::vector<bool> child_primes;
};

/// d_0 is the effective lower color of `v`, d_i is minus the color of child i.
CellBoundary boundary_directions(const DistinguishedGraph& g, VertexId v);

/// nullopt when the boundary is coherent (all directions equal); otherwise the
/// type of every corner, corner i sitting between side i and side i+1.
std::optional<std::vector<CornerType>> classify_corners(const CellBoundary& b);

CellKind classify_cell(const CellBoundary& b);

/// (n+1)(n+2)/2: n(n+1)/2 polar structures plus n+1 cyclic ones.
std::uint64_t cell_config_count(std::uint64_t n);

/// Every admissible structure of a cell with `n` upper sides whose lower side
/// has direction `lower_direction`. Cyclic options come first (entry 0..n),
/// then polar options ordered by (source corner, sink corner).
std::vector<CellOption> enumerate_cell_configs(std::size_t n, int lower_direction);

/// Recovers the cell structure from the decorations on the upper edges.
/// Throws ModelError if the decorations describe no admissible structure.
CellConfiguration extract_cell_config(int lower_direction,
                                      std::span<const EdgeColor> child_colors,
                                      const std::vector<bool>& child_primes);

}  // namespace diskflow
