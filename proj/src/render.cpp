#include "diskflow/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace diskflow {

std::string tree_to_dot(const DistinguishedGraph& g) {
  std::ostringstream os;
  os << "digraph distinguishing_graph {\n"
     << "  rankdir=BT;\n"
     << "  ordering=out;\n"
     << "  node [shape=circle];\n";
  os << "  v0 [label=\"0\", shape=doublecircle];\n";
  for (VertexId v = 1; v < g.tree.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << "\"];\n";
  }
  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    const auto& kids = g.tree.children(v);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const VertexId c = kids[i];
      const bool red = g.lower_color[c] == EdgeColor::red;
      os << "  v" << v << " -> v" << c << " [color=" << (red ? "red" : "black") << ", style=solid";
      os << ", taillabel=\"" << i + 1 << "\"";
      if (g.prime[c]) os << ", label=\"'\"";
      os << "];\n";
    }
  }
  // One rank per level keeps the left-to-right child order readable.
  std::vector<std::vector<VertexId>> levels;
  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    const auto l = g.tree.level(v);
    if (levels.size() <= l) levels.resize(l + 1);
    levels[l].push_back(v);
  }
  for (const auto& level : levels) {
    os << "  { rank=same;";
    for (VertexId v : level) os << " v" << v << ';';
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

constexpr double kSize = 400.0;
constexpr double kDiskRadius = 180.0;
constexpr double kCenterX = kSize / 2;
constexpr double kCenterY = kSize / 2;
constexpr double kBaseX = kCenterX;
constexpr double kBaseY = kCenterY + kDiskRadius;
constexpr double kDeg = std::numbers::pi / 180.0;
// Root loops stay inside [30, 150] degrees so every loop fits in the disk.
constexpr double kRootLo = 30.0 * kDeg;
constexpr double kRootHi = 150.0 * kDeg;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

struct Point {
  double x, y;
};

Point polar_at(double angle, double r) { return {kBaseX + r * std::cos(angle), kBaseY - r * std::sin(angle)}; }

std::string pt(Point p) { return num(p.x) + "," + num(p.y); }

double loop_radius(std::size_t depth) { return 0.9 * kDiskRadius * std::pow(0.8, static_cast<double>(depth - 1)); }

class DiagramWriter {
public:
  explicit DiagramWriter(const DistinguishedGraph& g) : g_(g), leaves_(g.tree.vertex_count(), 0) {
    for (VertexId v = static_cast<VertexId>(g.tree.vertex_count()); v-- > 0;) {
      if (g.tree.children(v).empty()) leaves_[v] = 1;
      if (auto p = g.tree.parent(v)) leaves_[*p] += leaves_[v];
    }
  }

  std::string write() {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kSize) << "\" height=\""
        << num(kSize) << "\" viewBox=\"0 0 " << num(kSize) << ' ' << num(kSize) << "\">\n"
        << "  <circle class=\"disk\" cx=\"" << num(kCenterX) << "\" cy=\"" << num(kCenterY) << "\" r=\""
        << num(kDiskRadius) << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"2\"/>\n";
    cell(0, 0.0, std::numbers::pi, kRootLo, kRootHi, 0, "  ");
    os_ << "  <circle class=\"singular-point\" cx=\"" << num(kBaseX) << "\" cy=\"" << num(kBaseY)
        << "\" r=\"4\" fill=\"#000\"/>\n"
        << "</svg>\n";
    return os_.str();
  }

private:
  // Cell of `v`: lower side spans [lo, hi] at the base point, children are
  // laid out in [inner_lo, inner_hi].
  void cell(VertexId v, double lo, double hi, double inner_lo, double inner_hi, std::size_t depth,
            const std::string& indent) {
    const auto& kids = g_.tree.children(v);
    std::vector<std::pair<double, double>> spans;
    double at = inner_lo;
    const double per_leaf = (inner_hi - inner_lo) / static_cast<double>(std::max<std::size_t>(leaves_[v], 1));
    for (VertexId c : kids) {
      const double width = per_leaf * static_cast<double>(leaves_[c]);
      const double inset = 0.06 * width;
      spans.emplace_back(at + inset, at + width - inset);
      at += width;
    }

    for (std::size_t i = 0; i < kids.size(); ++i) {
      loop(kids[i], v, spans[i].first, spans[i].second, depth + 1, indent);
    }

    const int d0 = sign(g_.effective_lower_color(v));
    std::vector<EdgeColor> colors;
    std::vector<bool> primes;
    for (VertexId c : kids) {
      colors.push_back(g_.lower_color[c]);
      primes.push_back(g_.prime[c]);
    }
    const auto config = extract_cell_config(d0, colors, primes);
    if (const auto* cyc = std::get_if<Cyclic>(&config)) {
      // Side e flows into corner e when running with the traversal, corner e-1 otherwise.
      const std::size_t sides = kids.size() + 1;
      const std::size_t corner = d0 > 0 ? cyc->elliptic_entry : (cyc->elliptic_entry + sides - 1) % sides;
      const double gap_lo = corner == 0 ? lo : spans[corner - 1].second;
      const double gap_hi = corner == kids.size() ? hi : spans[corner].first;
      const double r = depth == 0 ? 0.35 * kDiskRadius : 0.55 * loop_radius(depth);
      const auto p = polar_at((gap_lo + gap_hi) / 2, r);
      os_ << indent << "<circle class=\"elliptic-dot\" data-vertex=\"" << v << "\" data-corner=\"" << corner
          << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3.5\" fill=\"#06c\"/>\n";
    }
  }

  void loop(VertexId v, VertexId parent, double lo, double hi, std::size_t depth, const std::string& indent) {
    const double r = loop_radius(depth);
    const bool reversed = g_.lower_color[v] == EdgeColor::red;
    const std::string stroke = reversed ? "#c00" : "#000";
    os_ << indent << "<g class=\"separatrix\" data-vertex=\"" << v << "\">\n";
    const auto inner = indent + "  ";
    os_ << inner << "<path class=\"loop\" data-vertex=\"" << v << "\" data-parent=\"" << parent << "\" d=\"M "
        << pt({kBaseX, kBaseY}) << " L " << pt(polar_at(lo, r)) << " A " << num(r) << ',' << num(r) << " 0 0 0 "
        << pt(polar_at(hi, r)) << " Z\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n";

    // Arrowhead at the arc midpoint; forward means counterclockwise.
    const double mid = (lo + hi) / 2;
    const auto m = polar_at(mid, r);
    const double dir = reversed ? -1.0 : 1.0;
    const Point t{-std::sin(mid) * dir, -std::cos(mid) * dir};
    const Point nrm{-t.y, t.x};
    const double len = 7.0;
    const double half = 3.5;
    const Point tip{m.x + t.x * len, m.y + t.y * len};
    const Point a{m.x - t.x * len * 0.3 + nrm.x * half, m.y - t.y * len * 0.3 + nrm.y * half};
    const Point b{m.x - t.x * len * 0.3 - nrm.x * half, m.y - t.y * len * 0.3 - nrm.y * half};
    os_ << inner << "<path class=\"arrow " << (reversed ? "reversed" : "forward") << "\" data-vertex=\"" << v
        << "\" d=\"M " << pt(tip) << " L " << pt(a) << " L " << pt(b) << " Z\" fill=\"" << stroke << "\"/>\n";

    const double margin = 0.12 * (hi - lo);
    cell(v, lo, hi, lo + margin, hi - margin, depth, inner);
    os_ << indent << "</g>\n";
  }

  const DistinguishedGraph& g_;
  std::vector<std::size_t> leaves_;
  std::ostringstream os_;
};

}  // namespace

std::string diagram_to_svg(const DistinguishedGraph& g) {
  if (auto why = graph_invariant_violation(g)) {
    throw ModelError("graph is not realizable: " + *why);
  }
  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    const auto b = boundary_directions(g, v);
    if (classify_cell(b) == CellKind::invalid) {
      throw ModelError("graph is not realizable: cell of vertex " + std::to_string(v) + " has boundary " +
                       to_string(b));
    }
  }
  return DiagramWriter(g).write();
}

}  // namespace diskflow
