#include "diskflow/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace diskflow {

namespace {

void extend_degrees(std::size_t n, std::size_t pos, std::uint64_t sum, std::vector<std::uint32_t>& seq,
                    std::vector<PlaneRootedTree>& out) {
  if (pos == n) {
    // Last vertex is always a leaf once the sum reaches n.
    seq.push_back(0);
    out.push_back(PlaneRootedTree::from_up_degrees(seq));
    seq.pop_back();
    return;
  }
  // Vertices 0..pos must reach at least vertex pos+1: sum after pos >= pos+1.
  for (std::uint64_t d = n - sum + 1; d-- > 0;) {
    if (sum + d < pos + 1) break;
    seq.push_back(static_cast<std::uint32_t>(d));
    extend_degrees(n, pos + 1, sum + d, seq, out);
    seq.pop_back();
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("flow count exceeds 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("flow count exceeds 64 bits");
  return r;
}

std::string canonical_subtree(const PlaneRootedTree& t, VertexId v) {
  std::vector<std::string> parts;
  for (VertexId c : t.children(v)) parts.push_back(canonical_subtree(t, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ')';
  return s;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DISKFLOW_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

}  // namespace

std::vector<PlaneRootedTree> plane_trees(std::size_t n) {
  std::vector<PlaneRootedTree> out;
  std::vector<std::uint32_t> seq;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  extend_degrees(n, 0, 0, seq, out);
  return out;
}

std::string canonical_form(const PlaneRootedTree& t) { return canonical_subtree(t, 0); }

std::string AbstractClass::representative_code() const {
  return serialize_code(degree_code(representative.up_degrees()));
}

std::vector<AbstractClass> abstract_classes(std::size_t n) {
  std::map<std::string, AbstractClass> by_form;
  for (auto& t : plane_trees(n)) {
    auto& cls = by_form[canonical_form(t)];
    if (cls.embeddings == 0 || t.up_degrees() < cls.representative.up_degrees()) {
      cls.representative = t;
    }
    ++cls.embeddings;
  }
  std::vector<AbstractClass> out;
  for (auto& [form, cls] : by_form) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const AbstractClass& a, const AbstractClass& b) {
    return a.representative.up_degrees() > b.representative.up_degrees();
  });
  return out;
}

std::uint64_t flows_per_tree(const PlaneRootedTree& t) {
  std::uint64_t product = 1;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    product = checked_mul(product, cell_config_count(t.up_degree(v)));
  }
  return product;
}

std::uint64_t count_flows(std::size_t n) {
  // trees[m]: weighted count of plane trees with m edges.
  // forests[k][m]: weighted count of ordered k-tuples of trees with m edges in total.
  std::vector<std::uint64_t> trees(n + 1, 0);
  std::vector<std::vector<std::uint64_t>> forests(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  forests[0][0] = 1;
  for (std::size_t m = 0; m <= n; ++m) {
    // A tree with m edges has root degree k and a k-forest with m-k edges.
    for (std::size_t k = 0; k <= m; ++k) {
      trees[m] = checked_add(trees[m], checked_mul(cell_config_count(k), forests[k][m - k]));
    }
    // Split a k-forest with m edges into its first tree and the remaining (k-1)-forest.
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t first = 0; first <= m; ++first) {
        forests[k][m] = checked_add(forests[k][m], checked_mul(trees[first], forests[k - 1][m - first]));
      }
    }
  }
  return trees[n];
}

void for_each_flow_on_tree(const PlaneRootedTree& t, const std::function<void(const Code&)>& visit) {
  const auto count = t.vertex_count();
  // Options depend only on (up-degree, lower direction).
  std::map<std::pair<std::size_t, int>, std::vector<CellOption>> cache;
  auto options = [&](std::size_t deg, int d0) -> const std::vector<CellOption>& {
    auto [it, fresh] = cache.try_emplace({deg, d0});
    if (fresh) it->second = enumerate_cell_configs(deg, d0);
    return it->second;
  };

  Code code = degree_code(t.up_degrees());
  std::function<void(VertexId)> descend = [&](VertexId v) {
    if (v == count) {
      visit(code);
      return;
    }
    const auto& kids = t.children(v);
    const int d0 = code.tokens[v].overline ? -1 : 1;
    for (const auto& opt : options(kids.size(), d0)) {
      for (std::size_t i = 0; i < kids.size(); ++i) {
        code.tokens[kids[i]].overline = opt.child_colors[i] == EdgeColor::red;
        code.tokens[kids[i]].prime = opt.child_primes[i];
      }
      descend(v + 1);
    }
  };
  descend(0);
}

std::vector<Code> enumerate_flows(std::size_t n, unsigned workers) {
  const auto trees = plane_trees(n);
  const unsigned w = std::max(1u, std::min<unsigned>(worker_count(workers), static_cast<unsigned>(trees.size())));

  std::vector<std::vector<Code>> parts(w);
  auto run = [&](unsigned id) {
    for (std::size_t i = id; i < trees.size(); i += w) {
      for_each_flow_on_tree(trees[i], [&](const Code& c) { parts[id].push_back(c); });
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < w; ++id) pool.emplace_back(run, id);
  }

  std::vector<Code> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TableRow> table_rows(std::size_t max_n) {
  std::vector<TableRow> rows;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& cls : abstract_classes(n)) {
      TableRow r;
      r.n = n;
      r.abstract_tree = cls.representative_code();
      r.flows_per_embedding = flows_per_tree(cls.representative);
      r.embeddings = cls.embeddings;
      r.total = checked_mul(r.flows_per_embedding, r.embeddings);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,abstract_tree,flows_per_embedding,embeddings,total\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.abstract_tree << ',' << r.flows_per_embedding << ',' << r.embeddings << ',' << r.total
       << '\n';
  }
  return os.str();
}

}  // namespace diskflow
