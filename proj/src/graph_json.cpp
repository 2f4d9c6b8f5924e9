#include "diskflow/graph_json.hpp"

namespace diskflow {

using nlohmann::json;

json graph_to_json(const DistinguishedGraph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    const auto parent = g.tree.parent(v);
    vertices.push_back({
        {"id", v},
        {"parent", parent ? json(*parent) : json(nullptr)},
        {"children", g.tree.children(v)},
        {"color", v == 0 ? json(nullptr) : json(sign(g.lower_color[v]))},
        {"prime", v == 0 ? false : static_cast<bool>(g.prime[v])},
    });
  }
  return json{{"separatrices", g.tree.edge_count()}, {"vertices", std::move(vertices)}};
}

namespace {

const json& field(const json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ModelError("vertex " + std::to_string(index) + " lacks \"" + key + "\"");
  }
  return *it;
}

}  // namespace

DistinguishedGraph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ModelError("graph document must be an object with a \"vertices\" array");
  }
  const auto& vs = doc["vertices"];
  if (vs.empty()) {
    throw ModelError("graph has no vertices");
  }

  std::vector<std::vector<VertexId>> children(vs.size());
  std::vector<EdgeColor> colors(vs.size(), EdgeColor::black);
  std::vector<bool> primes(vs.size(), false);
  std::vector<json> parents(vs.size());

  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& v = vs[i];
    if (!v.is_object()) {
      throw ModelError("vertex " + std::to_string(i) + " is not an object");
    }
    const auto& id = field(v, "id", i);
    if (!id.is_number_unsigned() || id.get<std::size_t>() != i) {
      throw ModelError("vertex at position " + std::to_string(i) + " must have id " + std::to_string(i));
    }
    const auto& kids = field(v, "children", i);
    if (!kids.is_array()) {
      throw ModelError("vertex " + std::to_string(i) + " children must be an array");
    }
    for (const auto& k : kids) {
      if (!k.is_number_unsigned()) {
        throw ModelError("vertex " + std::to_string(i) + " has a non-integer child id");
      }
      children[i].push_back(k.get<VertexId>());
    }
    parents[i] = field(v, "parent", i);

    const auto& color = field(v, "color", i);
    const auto& prime = field(v, "prime", i);
    if (!prime.is_boolean()) {
      throw ModelError("vertex " + std::to_string(i) + " prime must be a boolean");
    }
    if (i == 0) {
      if (!color.is_null() || prime.get<bool>()) {
        throw ModelError("root must have a null color and no prime");
      }
      continue;
    }
    if (!color.is_number_integer() || (color.get<int>() != 1 && color.get<int>() != -1)) {
      throw ModelError("vertex " + std::to_string(i) + " color must be 1 or -1");
    }
    colors[i] = color_from_sign(color.get<int>());
    primes[i] = prime.get<bool>();
  }

  DistinguishedGraph g{PlaneRootedTree::from_children(std::move(children)), std::move(colors), std::move(primes)};

  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    const auto expected = g.tree.parent(v);
    const auto& p = parents[v];
    const bool ok = expected ? (p.is_number_unsigned() && p.get<VertexId>() == *expected) : p.is_null();
    if (!ok) {
      throw ModelError("vertex " + std::to_string(v) + " parent does not match the child lists");
    }
  }
  if (doc.contains("separatrices")) {
    const auto& n = doc["separatrices"];
    if (!n.is_number_unsigned() || n.get<std::size_t>() != g.tree.edge_count()) {
      throw ModelError("\"separatrices\" does not match the edge count");
    }
  }
  if (auto why = graph_invariant_violation(g)) {
    throw ModelError(*why);
  }
  return g;
}

}  // namespace diskflow
