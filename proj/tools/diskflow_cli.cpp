#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "diskflow/codec.hpp"
#include "diskflow/enumeration.hpp"
#include "diskflow/graph_json.hpp"
#include "diskflow/oracle.hpp"
#include "diskflow/render.hpp"

namespace {

using namespace diskflow;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitThm3 = 2;
constexpr int kExitUnrealizable = 3;

constexpr std::size_t kDefaultEnumCap = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit status carried through an exception so every subcommand shares one handler.
struct ValidationFailure : std::runtime_error {
  int status;
  ValidationFailure(int s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw UsageError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view status_word(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::pass: return "pass";
    case PropertyStatus::fail: return "FAIL";
    case PropertyStatus::skipped: return "skipped";
  }
  return "?";
}

std::string format_report(const Code& c, const ValidationReport& r) {
  std::ostringstream os;
  os << "code: " << serialize_code(c) << '\n';
  for (std::size_t i = 0; i < r.thm3.property.size(); ++i) {
    const auto& p = r.thm3.property[i];
    os << "property " << i + 1 << ": " << status_word(p.status);
    if (!p.passed()) {
      if (p.token) os << " at token " << *p.token;
      if (!p.detail.empty()) os << " (" << p.detail << ')';
    }
    os << '\n';
  }
  os << "realizable: " << (r.realizable ? "yes" : "no") << '\n';
  if (r.offending_vertex) {
    os << "offending vertex: " << *r.offending_vertex << '\n';
  }
  if (r.offending_boundary) {
    os << "boundary: " << to_string(*r.offending_boundary) << '\n';
  }
  if (!r.detail.empty()) {
    os << "reason: " << r.detail << '\n';
  }
  return os.str();
}

// Decodes a code, mapping structural failures onto the validation exit codes.
DistinguishedGraph decode_checked(const Code& c, bool require_realizable) {
  const auto r = check_realizable(c);
  if (!r.thm3.structurally_decodable() || (require_realizable && !r.thm3.passed())) {
    throw ValidationFailure(kExitThm3, r.detail);
  }
  if (require_realizable && !r.realizable) {
    throw ValidationFailure(kExitUnrealizable, r.detail);
  }
  return code_to_graph(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of flows on the disk with one boundary singular point"};
  app.require_subcommand(1);

  std::string code_text;
  std::string out_path;
  std::string in_path;
  std::size_t n = 0;
  bool count_only = false;
  bool no_cap = false;
  bool extended = false;
  std::string view = "tree";

  auto* validate = app.add_subcommand("validate", "Check a code against both validity tiers");
  validate->add_option("code", code_text, "Code text")->required();

  auto* decode = app.add_subcommand("decode", "Print the distinguishing graph of a code as JSON");
  decode->add_option("code", code_text, "Code text")->required();
  decode->add_option("--out", out_path, "Output file");

  auto* encode = app.add_subcommand("encode", "Read graph JSON and print its canonical code");
  encode->add_option("file", in_path, "Graph JSON file ('-' for stdin)")->required();

  auto* enumerate = app.add_subcommand("enum", "List every flow code with n separatrices");
  enumerate->add_option("--n", n, "Number of separatrices")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of classes");
  enumerate->add_flag("--no-cap", no_cap, "Allow listing beyond n = 10");
  enumerate->add_option("--out", out_path, "Output file");

  auto* table = app.add_subcommand("table", "Per-tree class statistics as CSV");
  table->add_option("--max-n", n, "Largest separatrix count")->required();
  table->add_option("--csv", out_path, "Output CSV file");

  auto* render = app.add_subcommand("render", "Draw the distinguishing tree (DOT) or the diagram (SVG)");
  render->add_option("code", code_text, "Code text")->required();
  render->add_option("--view", view, "tree or diagram")->check(CLI::IsMember({"tree", "diagram"}));
  render->add_option("--out", out_path, "Output file");

  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-check of the enumeration");
  oracle->add_option("--n", n, "Number of separatrices")->required();
  oracle->add_option("--json", out_path, "Write the report as JSON");
  oracle->add_flag("--extended", extended, "Permit n = 6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const auto c = parse_code(code_text);
      const auto r = check_realizable(c);
      std::cout << format_report(c, r);
      if (r.realizable) return kExitOk;
      return r.thm3.passed() ? kExitUnrealizable : kExitThm3;
    }
    if (decode->parsed()) {
      const auto g = decode_checked(parse_code(code_text), false);
      emit(graph_to_json(g).dump(2) + "\n", out_path);
      return kExitOk;
    }
    if (encode->parsed()) {
      const auto text = read_file(in_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
      }
      std::cout << serialize_code(graph_to_code(graph_from_json(doc))) << '\n';
      return kExitOk;
    }
    if (enumerate->parsed()) {
      if (count_only) {
        emit(std::to_string(count_flows(n)) + "\n", out_path);
        return kExitOk;
      }
      if (n > kDefaultEnumCap && !no_cap) {
        throw UsageError("refusing to list codes for n > " + std::to_string(kDefaultEnumCap) +
                         " (use --count-only or --no-cap)");
      }
      std::string text;
      for (const auto& c : enumerate_flows(n)) {
        text += serialize_code(c);
        text += '\n';
      }
      emit(text, out_path);
      return kExitOk;
    }
    if (table->parsed()) {
      const auto csv = table_csv(table_rows(n));
      emit(csv, out_path);
      return kExitOk;
    }
    if (render->parsed()) {
      const bool diagram = view == "diagram";
      const auto g = decode_checked(parse_code(code_text), diagram);
      emit(diagram ? diagram_to_svg(g) : tree_to_dot(g), out_path);
      return kExitOk;
    }
    if (oracle->parsed()) {
      const auto result = oracle_enumerate(n, extended ? kOracleExtendedBound : kOracleDefaultBound);
      std::cout << report_to_text(result.report);
      if (!out_path.empty()) emit(report_to_json(result.report).dump(2) + "\n", out_path);
      return kExitOk;
    }
  } catch (const ValidationFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status;
  } catch (const CodeError& e) {
    std::cerr << "error: malformed code: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    std::cerr << "error: invalid graph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
