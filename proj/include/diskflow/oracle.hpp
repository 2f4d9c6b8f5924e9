#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diskflow/codec.hpp"
#include "diskflow/model.hpp"

namespace diskflow {

/// Brute-force cross-checks. Nothing here goes through enumerate_cell_configs
/// or plane_trees; only the boundary and corner classification is shared with
/// the fast path.

struct OracleCellResult {
  std::uint64_t count = 0;
  std::uint64_t rejected_colorings = 0;  // colorings with two or more sources
  std::vector<std::vector<EdgeColor>> child_colors;
  std::vector<std::vector<bool>> child_primes;
};

/// Tries all 2^n child colorings of a cell with `n` upper sides.
OracleCellResult oracle_cell_configs(std::size_t n, int lower_direction);

struct DiscrepancyReport {
  std::size_t n = 0;
  std::uint64_t fast_count = 0;
  std::uint64_t oracle_count = 0;
  std::uint64_t thm3_only_count = 0;
  std::vector<Code> witness_codes;
};

struct OracleResult {
  std::vector<Code> codes;  // sorted
  DiscrepancyReport report;
};

inline constexpr std::size_t kOracleDefaultBound = 5;
inline constexpr std::size_t kOracleExtendedBound = 6;

/// Exhaustive search over every tree, edge coloring and prime subset.
/// Throws std::out_of_range when n exceeds `bound` (at most kOracleExtendedBound).
OracleResult oracle_enumerate(std::size_t n, std::size_t bound = kOracleDefaultBound);

nlohmann::json report_to_json(const DiscrepancyReport& r);
std::string report_to_text(const DiscrepancyReport& r);

}  // namespace diskflow
