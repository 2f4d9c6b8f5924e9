#include "diskflow/model.hpp"

#include <algorithm>
#include <sstream>

namespace diskflow {

PlaneRootedTree::PlaneRootedTree() : children_(1), parent_(1, 0) {}

PlaneRootedTree PlaneRootedTree::from_up_degrees(std::span<const std::uint32_t> up_degrees) {
  if (up_degrees.empty()) {
    throw ModelError("up-degree sequence is empty");
  }
  std::vector<std::vector<VertexId>> children(up_degrees.size());
  std::size_t next = 1;
  for (std::size_t v = 0; v < up_degrees.size(); ++v) {
    if (v >= next) {
      throw ModelError("vertex " + std::to_string(v) + " is unreachable from the root");
    }
    if (up_degrees[v] > up_degrees.size() - next) {
      throw ModelError("vertex " + std::to_string(v) + " has more children than remaining vertices");
    }
    for (std::uint32_t k = 0; k < up_degrees[v]; ++k) {
      children[v].push_back(static_cast<VertexId>(next++));
    }
  }
  if (next != up_degrees.size()) {
    throw ModelError("up-degree sequence leaves vertices without a parent");
  }
  return from_children(std::move(children));
}

PlaneRootedTree PlaneRootedTree::from_children(std::vector<std::vector<VertexId>> children) {
  if (children.empty()) {
    throw ModelError("tree has no vertices");
  }
  // Concatenating the child lists in id order must give 1, 2, ..., n.
  VertexId expected = 1;
  std::vector<VertexId> parent(children.size(), 0);
  for (std::size_t v = 0; v < children.size(); ++v) {
    for (VertexId c : children[v]) {
      if (c != expected) {
        throw ModelError("vertex ids are not in level order (expected " + std::to_string(expected) +
                         ", found " + std::to_string(c) + ")");
      }
      if (c <= v) {
        throw ModelError("vertex " + std::to_string(c) + " is not above its parent");
      }
      parent[c] = static_cast<VertexId>(v);
      ++expected;
    }
  }
  if (expected != children.size()) {
    throw ModelError("tree is not connected");
  }
  PlaneRootedTree t;
  t.children_ = std::move(children);
  t.parent_ = std::move(parent);
  return t;
}

std::optional<VertexId> PlaneRootedTree::parent(VertexId v) const {
  if (!contains(v)) {
    throw ModelError("unknown vertex id " + std::to_string(v));
  }
  if (v == 0) {
    return std::nullopt;
  }
  return parent_[v];
}

const std::vector<VertexId>& PlaneRootedTree::children(VertexId v) const {
  if (!contains(v)) {
    throw ModelError("unknown vertex id " + std::to_string(v));
  }
  return children_[v];
}

std::size_t PlaneRootedTree::child_index(VertexId v) const {
  auto p = parent(v);
  if (!p) {
    throw ModelError("the root has no parent");
  }
  // Siblings carry consecutive ids.
  return v - children_[*p].front();
}

std::size_t PlaneRootedTree::level(VertexId v) const {
  std::size_t depth = 0;
  while (auto p = parent(v)) {
    v = *p;
    ++depth;
  }
  return depth;
}

std::vector<std::uint32_t> PlaneRootedTree::up_degrees() const {
  std::vector<std::uint32_t> out;
  out.reserve(children_.size());
  for (const auto& c : children_) {
    out.push_back(static_cast<std::uint32_t>(c.size()));
  }
  return out;
}

EdgeColor DistinguishedGraph::effective_lower_color(VertexId v) const {
  if (!tree.contains(v)) {
    throw ModelError("unknown vertex id " + std::to_string(v));
  }
  return v == 0 ? EdgeColor::black : lower_color[v];
}

DistinguishedGraph undecorated(PlaneRootedTree tree) {
  const auto n = tree.vertex_count();
  return DistinguishedGraph{std::move(tree), std::vector<EdgeColor>(n, EdgeColor::black),
                            std::vector<bool>(n, false)};
}

std::optional<std::string> graph_invariant_violation(const DistinguishedGraph& g) {
  const auto n = g.tree.vertex_count();
  if (g.lower_color.size() != n || g.prime.size() != n) {
    return "decoration vectors do not match the vertex count";
  }
  if (g.lower_color[0] != EdgeColor::black || g.prime[0]) {
    return "root carries a color or a prime";
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto& kids = g.tree.children(v);
    const auto primed = std::count_if(kids.begin(), kids.end(), [&](VertexId c) { return g.prime[c]; });
    if (primed == 0) {
      continue;
    }
    if (primed > 1) {
      return "vertex " + std::to_string(v) + " has more than one primed upper edge";
    }
    const auto want = opposite(g.effective_lower_color(v));
    for (VertexId c : kids) {
      if (g.lower_color[c] != want) {
        return "primed edge above vertex " + std::to_string(v) + " is not in a cyclic cell";
      }
    }
  }
  return std::nullopt;
}

CellBoundary::CellBoundary(std::vector<int> d) : directions(std::move(d)) {
  if (directions.empty()) {
    throw ModelError("cell boundary has no sides");
  }
  for (int x : directions) {
    if (x != 1 && x != -1) {
      throw ModelError("cell boundary direction must be +1 or -1");
    }
  }
}

std::string to_string(const CellBoundary& b) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < b.directions.size(); ++i) {
    if (i) os << ", ";
    os << (b.directions[i] > 0 ? "+1" : "-1");
  }
  os << ']';
  return os.str();
}

std::string_view to_string(CornerType t) noexcept {
  switch (t) {
    case CornerType::source: return "source";
    case CornerType::sink: return "sink";
    case CornerType::hyperbolic: return "hyperbolic";
    case CornerType::elliptic: return "elliptic";
  }
  return "?";
}

std::string_view to_string(CellKind k) noexcept {
  switch (k) {
    case CellKind::cyclic: return "cyclic";
    case CellKind::polar: return "polar";
    case CellKind::invalid: return "invalid";
  }
  return "?";
}

CellBoundary boundary_directions(const DistinguishedGraph& g, VertexId v) {
  std::vector<int> d;
  d.push_back(sign(g.effective_lower_color(v)));
  for (VertexId c : g.tree.children(v)) {
    d.push_back(-sign(g.lower_color[c]));
  }
  return CellBoundary(std::move(d));
}

std::optional<std::vector<CornerType>> classify_corners(const CellBoundary& b) {
  const auto& d = b.directions;
  if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>{}) == d.end()) {
    return std::nullopt;
  }
  std::vector<CornerType> corners(d.size(), CornerType::hyperbolic);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int here = d[i];
    const int next = d[(i + 1) % d.size()];
    if (here < 0 && next > 0) {
      corners[i] = CornerType::source;
    } else if (here > 0 && next < 0) {
      corners[i] = CornerType::sink;
    }
  }
  return corners;
}

CellKind classify_cell(const CellBoundary& b) {
  auto corners = classify_corners(b);
  if (!corners) {
    return CellKind::cyclic;
  }
  const auto sources = std::count(corners->begin(), corners->end(), CornerType::source);
  return sources == 1 ? CellKind::polar : CellKind::invalid;
}

std::uint64_t cell_config_count(std::uint64_t n) { return (n + 1) * (n + 2) / 2; }

std::vector<CellOption> enumerate_cell_configs(std::size_t n, int lower_direction) {
  if (lower_direction != 1 && lower_direction != -1) {
    throw ModelError("lower direction must be +1 or -1");
  }
  const auto lower = color_from_sign(lower_direction);
  std::vector<CellOption> out;
  out.reserve(cell_config_count(n));

  // Coherent boundary: every upper edge has the color opposite to the lower one.
  for (std::size_t entry = 0; entry <= n; ++entry) {
    CellOption opt{Cyclic{entry}, std::vector<EdgeColor>(n, opposite(lower)), std::vector<bool>(n, false)};
    if (entry > 0) {
      opt.child_primes[entry - 1] = true;
    }
    out.push_back(std::move(opt));
  }

  // Polar: sides strictly after the source corner up to the sink corner run
  // forward (+1), the rest run backward (-1).
  const std::size_t sides = n + 1;
  for (std::size_t source = 0; source < sides; ++source) {
    for (std::size_t sink = 0; sink < sides; ++sink) {
      if (source == sink) continue;
      std::vector<int> d(sides, -1);
      for (std::size_t i = (source + 1) % sides; i != (sink + 1) % sides; i = (i + 1) % sides) {
        d[i] = 1;
      }
      if (d[0] != lower_direction) continue;
      CellOption opt{Polar{source, sink}, {}, std::vector<bool>(n, false)};
      for (std::size_t i = 1; i < sides; ++i) {
        opt.child_colors.push_back(color_from_sign(-d[i]));
      }
      out.push_back(std::move(opt));
    }
  }
  return out;
}

CellConfiguration extract_cell_config(int lower_direction, std::span<const EdgeColor> child_colors,
                                      const std::vector<bool>& child_primes) {
  if (child_primes.size() != child_colors.size()) {
    throw ModelError("color and prime lists differ in length");
  }
  std::vector<int> d{lower_direction};
  for (auto c : child_colors) d.push_back(-sign(c));
  const CellBoundary b(std::move(d));

  const auto primed = std::count(child_primes.begin(), child_primes.end(), true);
  auto corners = classify_corners(b);
  if (!corners) {
    if (primed > 1) {
      throw ModelError("cyclic cell with more than one primed edge");
    }
    auto it = std::find(child_primes.begin(), child_primes.end(), true);
    return Cyclic{it == child_primes.end() ? 0 : static_cast<std::size_t>(it - child_primes.begin()) + 1};
  }
  if (primed != 0) {
    throw ModelError("primed edge in a polar cell");
  }
  if (std::count(corners->begin(), corners->end(), CornerType::source) != 1) {
    throw ModelError("cell boundary " + to_string(b) + " has more than one source corner");
  }
  Polar p;
  for (std::size_t i = 0; i < corners->size(); ++i) {
    if ((*corners)[i] == CornerType::source) p.source_corner = i;
    if ((*corners)[i] == CornerType::sink) p.sink_corner = i;
  }
  return p;
}

}  // namespace diskflow
