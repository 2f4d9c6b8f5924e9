#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "diskflow/codec.hpp"
#include "diskflow/model.hpp"

namespace diskflow {

/// All plane rooted trees with `n` edges, each once, in decreasing
/// lexicographic order of their level-order up-degree sequences
/// (3000, 2100, 2010, 1200, 1110 for n = 3).
std::vector<PlaneRootedTree> plane_trees(std::size_t n);

/// Isomorphism-invariant form of the unembedded rooted tree: nested
/// parentheses with children sorted.
std::string canonical_form(const PlaneRootedTree& t);

struct AbstractClass {
  PlaneRootedTree representative;  // lexicographically least plane embedding
  std::uint64_t embeddings = 0;

  std::string representative_code() const;
};

/// Plane trees with `n` edges grouped by rooted-tree isomorphism, ordered by
/// representative.
std::vector<AbstractClass> abstract_classes(std::size_t n);

/// Product over all vertices of cell_config_count(up-degree).
std::uint64_t flows_per_tree(const PlaneRootedTree& t);

/// Number of topologically distinct 1-flows with `n` separatrices, by dynamic
/// programming over plane trees. Throws std::overflow_error past 64 bits.
std::uint64_t count_flows(std::size_t n);

/// Calls `visit` once for every realizable code on tree `t` (unordered).
void for_each_flow_on_tree(const PlaneRootedTree& t, const std::function<void(const Code&)>& visit);

/// Every realizable code with `n` separatrices, sorted by token order.
/// `workers` = 0 reads DISKFLOW_THREADS (default 1); output does not depend
/// on the worker count.
std::vector<Code> enumerate_flows(std::size_t n, unsigned workers = 0);

struct TableRow {
  std::size_t n = 0;
  std::string abstract_tree;
  std::uint64_t flows_per_embedding = 0;
  std::uint64_t embeddings = 0;
  std::uint64_t total = 0;
};

/// Per-class statistics for every n in 0..max_n.
std::vector<TableRow> table_rows(std::size_t max_n);

std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace diskflow
