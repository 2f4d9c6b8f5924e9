#include <doctest.h>

#include "diskflow/codec.hpp"
#include "diskflow/enumeration.hpp"
#include "diskflow/graph_json.hpp"

using namespace diskflow;
using nlohmann::json;

TEST_CASE("graph JSON layout") {
  const auto doc = graph_to_json(code_to_graph(parse_code("2100~")));
  CHECK(doc["separatrices"] == 3);
  REQUIRE(doc["vertices"].size() == 4);
  const auto& root = doc["vertices"][0];
  CHECK(root["id"] == 0);
  CHECK(root["parent"].is_null());
  CHECK(root["color"].is_null());
  CHECK(root["prime"] == false);
  CHECK(root["children"] == json::array({1, 2}));
  const auto& v3 = doc["vertices"][3];
  CHECK(v3["parent"] == 1);
  CHECK(v3["color"] == -1);
  CHECK(v3["children"].empty());
}

TEST_CASE("graph JSON round trip for every realizable code, n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& c : enumerate_flows(n)) {
      const auto g = code_to_graph(c);
      const auto text = graph_to_json(g).dump();
      const auto back = graph_from_json(json::parse(text));
      CHECK(back == g);
      CHECK(graph_to_code(back) == c);
    }
  }
}

TEST_CASE("graph JSON rejects malformed documents") {
  const auto good = graph_to_json(code_to_graph(parse_code("20~0~'")));
  CHECK_NOTHROW(graph_from_json(good));

  CHECK_THROWS_AS(graph_from_json(json::array()), ModelError);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", json::array()}}), ModelError);

  auto bad_id = good;
  bad_id["vertices"][1]["id"] = 5;
  CHECK_THROWS_AS(graph_from_json(bad_id), ModelError);

  auto bad_parent = good;
  bad_parent["vertices"][2]["parent"] = 1;
  CHECK_THROWS_AS(graph_from_json(bad_parent), ModelError);

  auto bad_color = good;
  bad_color["vertices"][1]["color"] = 0;
  CHECK_THROWS_AS(graph_from_json(bad_color), ModelError);

  auto root_color = good;
  root_color["vertices"][0]["color"] = 1;
  CHECK_THROWS_AS(graph_from_json(root_color), ModelError);

  auto order = good;
  order["vertices"][0]["children"] = json::array({2, 1});
  CHECK_THROWS_AS(graph_from_json(order), ModelError);

  auto count = good;
  count["separatrices"] = 3;
  CHECK_THROWS_AS(graph_from_json(count), ModelError);

  auto two_primes = good;
  two_primes["vertices"][1]["prime"] = true;
  CHECK_THROWS_AS(graph_from_json(two_primes), ModelError);

  auto missing = good;
  missing["vertices"][1].erase("prime");
  CHECK_THROWS_AS(graph_from_json(missing), ModelError);
}
