#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diskflow/model.hpp"

namespace diskflow {

class CodeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Up-degree of one vertex plus the marks on its lower edge.
/// Ordering is (value, overline, prime), unmarked before marked.
struct CodeToken {
  std::uint32_t value = 0;
  bool overline = false;  // lower edge colored -1
  bool prime = false;     // elliptic label on the lower edge

  friend auto operator<=>(const CodeToken&, const CodeToken&) = default;
};

/// Level-order token sequence of a distinguished graph.
struct Code {
  std::vector<CodeToken> tokens;

  /// Number of separatrices: the sum of token values.
  std::uint64_t separatrices() const noexcept;

  friend auto operator<=>(const Code&, const Code&) = default;
};

/// Text grammar. Input containing whitespace is read as single-space separated
/// tokens `INT ['~'] [''']`; otherwise every digit is one token followed by
/// its marks. Structure is not checked here.
Code parse_code(std::string_view text);

/// Compact form when every value is a single digit, spaced form otherwise.
std::string serialize_code(const Code& c);

enum class PropertyStatus { pass, fail, skipped };

struct PropertyResult {
  PropertyStatus status = PropertyStatus::pass;
  std::optional<std::size_t> token;  // offending token index
  std::string detail;

  bool passed() const noexcept { return status == PropertyStatus::pass; }
};

/// The four necessary properties of a code. Property 4 needs the decoded tree
/// and is skipped when properties 1 or 3 fail.
struct Thm3Report {
  std::array<PropertyResult, 4> property;

  bool passed() const noexcept;
  bool structurally_decodable() const noexcept;
  /// Index (0-based) of the first failing property.
  std::optional<std::size_t> first_failure() const noexcept;
};

struct ValidationReport {
  Thm3Report thm3;
  bool realizable = false;
  std::optional<VertexId> offending_vertex;
  std::optional<CellBoundary> offending_boundary;
  std::string detail;
};

Thm3Report check_thm3(const Code& c);

/// Authoritative validity: the code passes check_thm3, every cell of the
/// decoded graph is cyclic or polar, and primes only sit in cyclic cells.
ValidationReport check_realizable(const Code& c);

inline bool is_realizable(const Code& c) { return check_realizable(c).realizable; }

/// Level-by-level reconstruction. Throws CodeError when properties 1-3 fail.
DistinguishedGraph code_to_graph(const Code& c);

Code graph_to_code(const DistinguishedGraph& g);

/// Topological equivalence of two realizable codes. Throws CodeError if
/// either code is not realizable.
bool are_equivalent(const Code& a, const Code& b);

/// Tokens of a plain (unmarked) up-degree sequence.
Code degree_code(const std::vector<std::uint32_t>& up_degrees);

}  // namespace diskflow
