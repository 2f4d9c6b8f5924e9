#pragma once

// Structural reader for the diagram SVG: pulls out elements by class and
// their data attributes. Geometry is ignored.

#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace svg_probe {

struct Element {
  std::string tag;
  std::map<std::string, std::string> attrs;
};

inline std::vector<Element> elements(const std::string& svg) {
  std::vector<Element> out;
  static const std::regex tag_re(R"(<([a-zA-Z]+)\s([^>]*)>)");
  static const std::regex attr_re(R"(([a-zA-Z-]+)="([^"]*)\")");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag_re); it != std::sregex_iterator(); ++it) {
    Element e;
    e.tag = (*it)[1];
    const std::string body = (*it)[2];
    for (auto a = std::sregex_iterator(body.begin(), body.end(), attr_re); a != std::sregex_iterator(); ++a) {
      e.attrs[(*a)[1]] = (*a)[2];
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct Summary {
  std::map<int, int> loop_parent;  // vertex -> parent
  std::size_t loops = 0;
  std::size_t forward_arrows = 0;
  std::size_t reversed_arrows = 0;
  std::size_t elliptic_dots = 0;
  std::map<int, int> dot_corner;  // vertex -> corner index
  std::size_t max_group_depth = 0;
};

inline Summary summarize(const std::string& svg) {
  Summary s;
  for (const auto& e : elements(svg)) {
    auto cls = e.attrs.find("class");
    if (cls == e.attrs.end()) continue;
    if (cls->second == "loop") {
      ++s.loops;
      s.loop_parent[std::stoi(e.attrs.at("data-vertex"))] = std::stoi(e.attrs.at("data-parent"));
    } else if (cls->second == "arrow forward") {
      ++s.forward_arrows;
    } else if (cls->second == "arrow reversed") {
      ++s.reversed_arrows;
    } else if (cls->second == "elliptic-dot") {
      ++s.elliptic_dots;
      s.dot_corner[std::stoi(e.attrs.at("data-vertex"))] = std::stoi(e.attrs.at("data-corner"));
    }
  }
  // Depth of nested separatrix groups.
  std::size_t depth = 0;
  static const std::regex group_re(R"(<g class="separatrix"|</g>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), group_re); it != std::sregex_iterator(); ++it) {
    if (it->str() == "</g>") {
      --depth;
    } else {
      s.max_group_depth = std::max(s.max_group_depth, ++depth);
    }
  }
  return s;
}

}  // namespace svg_probe
