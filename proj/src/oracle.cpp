#include "diskflow/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "diskflow/enumeration.hpp"

namespace diskflow {

OracleCellResult oracle_cell_configs(std::size_t n, int lower_direction) {
  if (n >= 63) throw std::out_of_range("too many upper sides for exhaustive search");
  OracleCellResult r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<EdgeColor> colors(n);
    std::vector<int> d{lower_direction};
    for (std::size_t i = 0; i < n; ++i) {
      colors[i] = (mask >> i) & 1 ? EdgeColor::red : EdgeColor::black;
      d.push_back(-sign(colors[i]));
    }
    const auto corners = classify_corners(CellBoundary(d));
    if (!corners) {
      // Coherent: the elliptic corner may be entered along any side.
      for (std::size_t entry = 0; entry <= n; ++entry) {
        std::vector<bool> primes(n, false);
        if (entry > 0) primes[entry - 1] = true;
        r.child_colors.push_back(colors);
        r.child_primes.push_back(std::move(primes));
      }
      continue;
    }
    if (std::count(corners->begin(), corners->end(), CornerType::source) == 1) {
      r.child_colors.push_back(colors);
      r.child_primes.emplace_back(n, false);
    } else {
      ++r.rejected_colorings;
    }
  }
  r.count = r.child_colors.size();
  return r;
}

namespace {

// Level-order up-degree sequences of all rooted plane trees with n edges, by
// filtering every sequence in {0..n}^(n+1).
std::vector<std::vector<std::uint32_t>> brute_force_degree_sequences(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> seq(n + 1, 0);
  while (true) {
    std::uint64_t sum = 0;
    bool ok = true;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += seq[k];
      if (k < n && sum < k + 1) {
        ok = false;
        break;
      }
    }
    if (ok && sum == n) out.push_back(seq);

    std::size_t i = 0;
    while (i <= n && seq[i] == n) seq[i++] = 0;
    if (i > n) break;
    ++seq[i];
  }
  return out;
}

}  // namespace

OracleResult oracle_enumerate(std::size_t n, std::size_t bound) {
  bound = std::min(bound, kOracleExtendedBound);
  if (n > bound) {
    throw std::out_of_range("oracle bound exceeded: n = " + std::to_string(n) + " > " + std::to_string(bound));
  }
  OracleResult result;
  result.report.n = n;
  for (const auto& degrees : brute_force_degree_sequences(n)) {
    for (std::uint64_t colors = 0; colors < (std::uint64_t{1} << n); ++colors) {
      for (std::uint64_t primes = 0; primes < (std::uint64_t{1} << n); ++primes) {
        Code c = degree_code(degrees);
        for (std::size_t i = 0; i < n; ++i) {
          c.tokens[i + 1].overline = (colors >> i) & 1;
          c.tokens[i + 1].prime = (primes >> i) & 1;
        }
        const auto rep = check_realizable(c);
        if (rep.realizable) {
          result.codes.push_back(std::move(c));
        } else if (rep.thm3.passed()) {
          result.report.witness_codes.push_back(std::move(c));
        }
      }
    }
  }
  std::sort(result.codes.begin(), result.codes.end());
  std::sort(result.report.witness_codes.begin(), result.report.witness_codes.end());
  result.report.oracle_count = result.codes.size();
  result.report.thm3_only_count = result.report.witness_codes.size();
  result.report.fast_count = count_flows(n);
  return result;
}

nlohmann::json report_to_json(const DiscrepancyReport& r) {
  std::vector<std::string> witnesses;
  for (const auto& c : r.witness_codes) witnesses.push_back(serialize_code(c));
  return nlohmann::json{{"n", r.n},
                        {"fast_count", r.fast_count},
                        {"oracle_count", r.oracle_count},
                        {"thm3_only_count", r.thm3_only_count},
                        {"witnesses", witnesses}};
}

std::string report_to_text(const DiscrepancyReport& r) {
  std::ostringstream os;
  os << "n: " << r.n << '\n'
     << "fast_count: " << r.fast_count << '\n'
     << "oracle_count: " << r.oracle_count << '\n'
     << "thm3_only_count: " << r.thm3_only_count << '\n'
     << "witnesses:";
  for (const auto& c : r.witness_codes) os << ' ' << serialize_code(c);
  os << '\n';
  return os.str();
}

}  // namespace diskflow
