#include "diskflow/codec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace diskflow {

std::uint64_t Code::separatrices() const noexcept {
  return std::accumulate(tokens.begin(), tokens.end(), std::uint64_t{0},
                         [](std::uint64_t s, const CodeToken& t) { return s + t.value; });
}

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

CodeToken parse_spaced_token(std::string_view tok, std::size_t index) {
  auto fail = [&](const std::string& why) {
    return CodeError("malformed token " + std::to_string(index) + " \"" + std::string(tok) + "\": " + why);
  };
  if (tok.empty()) {
    throw CodeError("malformed token " + std::to_string(index) + ": tokens must be separated by single spaces");
  }
  std::size_t i = 0;
  std::uint64_t value = 0;
  while (i < tok.size() && is_digit(tok[i])) {
    value = value * 10 + static_cast<std::uint64_t>(tok[i] - '0');
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw fail("value out of range");
    }
    ++i;
  }
  if (i == 0) {
    throw fail("expected a decimal number");
  }
  CodeToken t{static_cast<std::uint32_t>(value)};
  if (i < tok.size() && tok[i] == '~') {
    t.overline = true;
    ++i;
  }
  if (i < tok.size() && tok[i] == '\'') {
    t.prime = true;
    ++i;
  }
  if (i != tok.size()) {
    throw fail("unexpected character '" + std::string(1, tok[i]) + "'");
  }
  return t;
}

}  // namespace

Code parse_code(std::string_view text) {
  if (text.empty()) {
    throw CodeError("empty input");
  }
  Code c;
  if (std::any_of(text.begin(), text.end(), is_space)) {
    std::size_t start = 0;
    while (true) {
      const auto end = text.find(' ', start);
      const auto tok = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      c.tokens.push_back(parse_spaced_token(tok, c.tokens.size()));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (is_digit(ch)) {
        c.tokens.push_back(CodeToken{static_cast<std::uint32_t>(ch - '0')});
        continue;
      }
      if (c.tokens.empty()) {
        throw CodeError("malformed token 0: code must start with a digit");
      }
      auto& last = c.tokens.back();
      const auto where = "malformed token " + std::to_string(c.tokens.size() - 1);
      if (ch == '~') {
        if (last.overline || last.prime) {
          throw CodeError(where + ": misplaced '~'");
        }
        last.overline = true;
      } else if (ch == '\'') {
        if (last.prime) {
          throw CodeError(where + ": repeated prime");
        }
        last.prime = true;
      } else {
        throw CodeError(where + ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
  }
  if (c.tokens.front().overline || c.tokens.front().prime) {
    throw CodeError("first token must not carry marks");
  }
  return c;
}

std::string serialize_code(const Code& c) {
  const bool compact = std::all_of(c.tokens.begin(), c.tokens.end(), [](const CodeToken& t) { return t.value <= 9; });
  std::string out;
  for (std::size_t i = 0; i < c.tokens.size(); ++i) {
    const auto& t = c.tokens[i];
    if (!compact && i > 0) out += ' ';
    out += std::to_string(t.value);
    if (t.overline) out += '~';
    if (t.prime) out += '\'';
  }
  return out;
}

bool Thm3Report::passed() const noexcept {
  return std::all_of(property.begin(), property.end(), [](const PropertyResult& p) { return p.passed(); });
}

bool Thm3Report::structurally_decodable() const noexcept {
  return property[0].passed() && property[1].passed() && property[2].passed();
}

std::optional<std::size_t> Thm3Report::first_failure() const noexcept {
  for (std::size_t i = 0; i < property.size(); ++i) {
    if (!property[i].passed()) return i;
  }
  return std::nullopt;
}

Thm3Report check_thm3(const Code& c) {
  Thm3Report r;
  const auto n = c.separatrices();
  const auto count = c.tokens.size();

  if (count != n + 1) {
    r.property[0] = {PropertyStatus::fail, count > n + 1 ? std::optional<std::size_t>(n + 1) : std::nullopt,
                     "token count " + std::to_string(count) + " differs from value sum + 1 = " +
                         std::to_string(n + 1)};
  }

  if (count == 0) {
    r.property[1] = {PropertyStatus::fail, std::nullopt, "code has no tokens"};
  } else if (c.tokens[0].overline || c.tokens[0].prime) {
    r.property[1] = {PropertyStatus::fail, 0, "first token carries a mark"};
  }

  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k <= n && k <= count; ++k) {
    prefix += c.tokens[k - 1].value;
    if (prefix < k) {
      r.property[2] = {PropertyStatus::fail, k - 1,
                       "sum of the first " + std::to_string(k) + " values is " + std::to_string(prefix)};
      break;
    }
  }

  if (!r.property[0].passed() || !r.property[2].passed() || count == 0) {
    r.property[3] = {PropertyStatus::skipped, std::nullopt, "tree structure is not decodable"};
    return r;
  }

  std::vector<std::uint32_t> degrees;
  for (const auto& t : c.tokens) degrees.push_back(t.value);
  const auto tree = PlaneRootedTree::from_up_degrees(degrees);
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    const auto& kids = tree.children(v);
    auto primed = std::find_if(kids.begin(), kids.end(), [&](VertexId k) { return c.tokens[k].prime; });
    if (primed == kids.end()) continue;
    const auto& pt = c.tokens[*primed];
    for (VertexId k : kids) {
      if (k != *primed && c.tokens[k].prime) {
        r.property[3] = {PropertyStatus::fail, k, "connected token is also primed"};
        return r;
      }
      if (c.tokens[k].overline != pt.overline) {
        r.property[3] = {PropertyStatus::fail, k, "connected tokens disagree on the overline"};
        return r;
      }
    }
    if (c.tokens[v].overline == pt.overline) {
      r.property[3] = {PropertyStatus::fail, *primed, "parent overline is not opposite to the primed group"};
      return r;
    }
  }
  return r;
}

ValidationReport check_realizable(const Code& c) {
  ValidationReport rep;
  rep.thm3 = check_thm3(c);
  if (!rep.thm3.passed()) {
    const auto p = *rep.thm3.first_failure();
    rep.detail = "property " + std::to_string(p + 1) + " violated: " + rep.thm3.property[p].detail;
    return rep;
  }
  const auto g = code_to_graph(c);
  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    auto b = boundary_directions(g, v);
    const auto kind = classify_cell(b);
    if (kind == CellKind::invalid) {
      rep.offending_vertex = v;
      rep.detail = "cell of vertex " + std::to_string(v) + " has boundary " + to_string(b) +
                   " with more than one source corner";
      rep.offending_boundary = std::move(b);
      return rep;
    }
    if (kind != CellKind::cyclic) {
      for (VertexId k : g.tree.children(v)) {
        if (g.prime[k]) {
          rep.offending_vertex = v;
          rep.detail = "cell of vertex " + std::to_string(v) + " is polar but carries a prime";
          rep.offending_boundary = std::move(b);
          return rep;
        }
      }
    }
  }
  rep.realizable = true;
  return rep;
}

DistinguishedGraph code_to_graph(const Code& c) {
  const auto report = check_thm3(c);
  if (!report.structurally_decodable()) {
    const auto p = *report.first_failure();
    throw CodeError("code is not decodable: property " + std::to_string(p + 1) + " violated: " +
                    report.property[p].detail);
  }
  std::vector<std::uint32_t> degrees;
  for (const auto& t : c.tokens) degrees.push_back(t.value);
  auto g = undecorated(PlaneRootedTree::from_up_degrees(degrees));
  for (std::size_t i = 1; i < c.tokens.size(); ++i) {
    g.lower_color[i] = c.tokens[i].overline ? EdgeColor::red : EdgeColor::black;
    g.prime[i] = c.tokens[i].prime;
  }
  return g;
}

Code graph_to_code(const DistinguishedGraph& g) {
  Code c;
  c.tokens.reserve(g.tree.vertex_count());
  for (VertexId v = 0; v < g.tree.vertex_count(); ++v) {
    const bool root = v == 0;
    c.tokens.push_back(CodeToken{static_cast<std::uint32_t>(g.tree.up_degree(v)),
                                 !root && g.lower_color[v] == EdgeColor::red, !root && g.prime[v]});
  }
  return c;
}

bool are_equivalent(const Code& a, const Code& b) {
  for (const Code* c : {&a, &b}) {
    const auto r = check_realizable(*c);
    if (!r.realizable) {
      throw CodeError("code " + serialize_code(*c) + " is not realizable: " + r.detail);
    }
  }
  return a.tokens == b.tokens;
}

Code degree_code(const std::vector<std::uint32_t>& up_degrees) {
  Code c;
  for (auto d : up_degrees) c.tokens.push_back(CodeToken{d});
  return c;
}

}  // namespace diskflow
