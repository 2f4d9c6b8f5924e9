#include <doctest.h>

#include <random>

#include "diskflow/codec.hpp"
#include "diskflow/enumeration.hpp"

using namespace diskflow;

namespace {

CodeToken tok(std::uint32_t v, bool over = false, bool prime = false) { return CodeToken{v, over, prime}; }

}  // namespace

TEST_CASE("parse compact and spaced forms") {
  CHECK(parse_code("2100~").tokens == std::vector<CodeToken>{tok(2), tok(1), tok(0), tok(0, true)});
  CHECK(parse_code("0").tokens == std::vector<CodeToken>{tok(0)});
  CHECK(parse_code("1 1~' 0").tokens == std::vector<CodeToken>{tok(1), tok(1, true, true), tok(0)});
  CHECK(parse_code("10 0 0 0 0 0 0 0 0 0 0").tokens.front().value == 10);
  CHECK(parse_code("20'0").tokens[1] == tok(0, false, true));
  CHECK(parse_code("4294967295 0").tokens.front().value == 4294967295u);
  // Without whitespace every digit is its own token.
  CHECK(parse_code("12").tokens.size() == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_code(""), CodeError);
  CHECK_THROWS_AS(parse_code("1~0"), CodeError);
  CHECK_THROWS_AS(parse_code("1'0"), CodeError);
  CHECK_THROWS_AS(parse_code("~10"), CodeError);
  CHECK_THROWS_AS(parse_code("10'~"), CodeError);
  CHECK_THROWS_AS(parse_code("10~~"), CodeError);
  CHECK_THROWS_AS(parse_code("10''"), CodeError);
  CHECK_THROWS_AS(parse_code("1x0"), CodeError);
  CHECK_THROWS_AS(parse_code("1  0"), CodeError);
  CHECK_THROWS_AS(parse_code(" 1 0"), CodeError);
  CHECK_THROWS_AS(parse_code("1 0 "), CodeError);
  CHECK_THROWS_AS(parse_code("1\t0"), CodeError);
  CHECK_THROWS_AS(parse_code("1 ~0"), CodeError);
  CHECK_THROWS_AS(parse_code("4294967296 0"), CodeError);
}

TEST_CASE("serialize") {
  CHECK(serialize_code(Code{{tok(1), tok(0, true, true)}}) == "10~'");
  CHECK(serialize_code(Code{{tok(0)}}) == "0");
  Code big{{tok(10)}};
  for (int i = 0; i < 10; ++i) big.tokens.push_back(tok(0));
  CHECK(serialize_code(big) == "10 0 0 0 0 0 0 0 0 0 0");
  CHECK(serialize_code(parse_code("2 1 0 0~")) == "2100~");
}

TEST_CASE("parse and serialize are inverse on random token lists") {
  // A lone multi-digit token is the one list the compact form cannot carry;
  // it is never a structurally valid code, so lists here have two or more tokens.
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    Code c;
    const auto len = 2 + rng() % 11;
    const bool wide = rng() % 4 == 0;
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint32_t v = wide ? rng() % 40 : rng() % 10;
      c.tokens.push_back(i == 0 ? tok(v) : tok(v, rng() % 2, rng() % 2));
    }
    const auto text = serialize_code(c);
    CHECK(parse_code(text) == c);
    CHECK(serialize_code(parse_code(text)) == text);
  }
}

TEST_CASE("necessary code properties") {
  CHECK(check_thm3(parse_code("2100~")).passed());
  CHECK(check_thm3(parse_code("3 0 0~ 0")).passed());

  const auto r = check_thm3(parse_code("01"));
  CHECK(r.property[2].status == PropertyStatus::fail);
  CHECK(r.property[2].token == 0u);
  CHECK(r.property[3].status == PropertyStatus::skipped);

  const auto len = check_thm3(parse_code("200"));
  CHECK(len.passed());
  CHECK(check_thm3(parse_code("2000")).property[0].status == PropertyStatus::fail);
  CHECK(check_thm3(parse_code("20")).property[0].status == PropertyStatus::fail);

  Code marked{{tok(1, true), tok(0)}};
  CHECK(check_thm3(marked).property[1].status == PropertyStatus::fail);

  // Two primes among connected tokens.
  CHECK(check_thm3(parse_code("20~'0~'")).property[3].status == PropertyStatus::fail);
  // Connected tokens disagree on the overline.
  CHECK(check_thm3(parse_code("20~'0")).property[3].status == PropertyStatus::fail);
  // Parent overline not opposite.
  CHECK(check_thm3(parse_code("11~0~'")).property[3].status == PropertyStatus::fail);
  CHECK(check_thm3(parse_code("200'")).property[3].status == PropertyStatus::fail);
  CHECK(check_thm3(parse_code("11~0'")).passed());
}

TEST_CASE("realizability") {
  const auto ok = check_realizable(parse_code("2100~"));
  CHECK(ok.realizable);

  const auto gap = check_realizable(parse_code("3 0 0~ 0"));
  CHECK(gap.thm3.passed());
  CHECK_FALSE(gap.realizable);
  REQUIRE(gap.offending_vertex.has_value());
  CHECK(*gap.offending_vertex == 0);
  REQUIRE(gap.offending_boundary.has_value());
  CHECK(gap.offending_boundary->directions == std::vector<int>{1, -1, 1, -1});

  CHECK(check_realizable(parse_code("10~'")).realizable);
  CHECK_FALSE(check_realizable(parse_code("01")).realizable);
}

TEST_CASE("code to graph") {
  const auto edge = code_to_graph(parse_code("10"));
  CHECK(edge.tree.vertex_count() == 2);
  CHECK(edge.tree.children(0) == std::vector<VertexId>{1});
  CHECK(edge.tree.children(1).empty());
  CHECK(edge.lower_color[1] == EdgeColor::black);
  CHECK_FALSE(edge.prime[1]);

  const auto path = code_to_graph(parse_code("110"));
  CHECK(path.tree.children(1) == std::vector<VertexId>{2});
  CHECK(path.lower_color[2] == EdgeColor::black);

  CHECK(code_to_graph(parse_code("0")).tree.vertex_count() == 1);

  const auto fig = code_to_graph(parse_code("2100~"));
  CHECK(fig.tree.children(0) == std::vector<VertexId>{1, 2});
  CHECK(fig.tree.children(1) == std::vector<VertexId>{3});
  CHECK(fig.lower_color[1] == EdgeColor::black);
  CHECK(fig.lower_color[2] == EdgeColor::black);
  CHECK(fig.lower_color[3] == EdgeColor::red);

  CHECK_THROWS_AS(code_to_graph(parse_code("01")), CodeError);
  CHECK_THROWS_AS(code_to_graph(parse_code("200 0")), CodeError);
}

TEST_CASE("graph to code") {
  CHECK(serialize_code(graph_to_code(DistinguishedGraph{})) == "0");
  auto star = undecorated(PlaneRootedTree::from_up_degrees(std::vector<std::uint32_t>{2, 0, 0}));
  star.lower_color[1] = star.lower_color[2] = EdgeColor::red;
  star.prime[2] = true;
  CHECK(serialize_code(graph_to_code(star)) == "20~0~'");
  CHECK(serialize_code(graph_to_code(code_to_graph(parse_code("2100~")))) == "2100~");
}

TEST_CASE("equivalence") {
  CHECK(are_equivalent(parse_code("2100~"), parse_code("2100~")));
  CHECK_FALSE(are_equivalent(parse_code("10"), parse_code("10~")));
  CHECK(are_equivalent(parse_code("2 1 0 0~"), parse_code("2100~")));
  CHECK_THROWS_AS(are_equivalent(parse_code("3 0 0~ 0"), parse_code("3000")), CodeError);
}

TEST_CASE("round trips and level order over all realizable codes, n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& c : enumerate_flows(n)) {
      const auto text = serialize_code(c);
      CHECK(parse_code(text) == c);
      const auto g = code_to_graph(c);
      CHECK(graph_to_code(g) == c);
      CHECK(code_to_graph(graph_to_code(g)) == g);
      for (VertexId v = 1; v < g.tree.vertex_count(); ++v) CHECK(*g.tree.parent(v) < v);
    }
  }
}

TEST_CASE("every realizable code satisfies the necessary code properties, n <= 6") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& c : enumerate_flows(n)) {
      const auto r = check_realizable(c);
      CHECK(r.realizable);
      CHECK(r.thm3.passed());
    }
  }
}
