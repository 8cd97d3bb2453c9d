#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpa/classify.hpp"
#include "lpa/error.hpp"
#include "lpa/extremal.hpp"
#include "lpa/graph.hpp"
#include "lpa/oracle.hpp"
#include "lpa/partitions.hpp"
#include "lpa/truncate.hpp"

namespace lpa::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kVerificationFailed = 3,
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string read_document(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline DirectedMultigraph load_graph(const std::string& path, std::istream& in) {
  try {
    return parse_graph(read_document(path, in));
  } catch (const ParseError& err) {
    throw ParseError(err.line(), path + ": " + std::string(err.what()).substr(std::string(err.what()).find(": ") + 2));
  }
}

inline void write_dot(const std::optional<std::string>& path, const DirectedMultigraph& g) {
  if (!path) return;
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw Error("cannot write '" + *path + "'");
  file << to_dot(g);
}

inline Json report_json(const ExtremalReport& r) {
  Json out;
  out["n"] = r.n;
  out["s"] = r.s ? *r.s : *r.optimal_s;
  out["value"] = r.value;
  out["type"] = to_json(semisimple_type(r.witness));
  out["witness_dot"] = to_dot(r.witness);
  return out;
}

inline void print_report_text(std::ostream& out, const ExtremalReport& r) {
  out << "n " << r.n << "\n";
  out << "s " << (r.s ? *r.s : *r.optimal_s) << "\n";
  out << "value " << r.value << "\n";
  out << "type " << semisimple_type(r.witness).to_string() << "\n";
}

inline std::size_t to_size(std::int64_t v, const char* what) {
  if (v < 0) throw PreconditionError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/**
 * Runs one CLI invocation. `args` excludes the program name. Output goes to
 * `out`, diagnostics to `err`; the return value is the process exit code.
 */
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::Json;

  CLI::App app{
      "Finite-dimensional Leavitt path algebras of finite acyclic graphs: classification,\n"
      "truncated trees, extremal dimensions and line-graph census.\n"
      "Graph files hold one declaration per line: 'v NAME' or 'e NAME SRC DST' ('-' reads stdin).\n"
      "Partition counts are printed as decimal strings in JSON since they exceed 2^53.",
      "lpa"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  std::optional<std::string> dot_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--dot", dot_path, "Also write the relevant graph as DOT to this path");

  std::string file, file2, type_text;
  std::int64_t n = 0;
  std::optional<std::int64_t> sinks;
  oracle::VerificationOptions vopt;
  bool allow_large = false;

  auto* classify_cmd = app.add_subcommand("classify", "Type, dimension, sink counts and kappa of a graph (JSON)");
  classify_cmd->add_option("FILE", file, "Graph file")->required();

  auto* truncate_cmd = app.add_subcommand("truncate", "Truncated tree and alpha code of a graph or type");
  auto* truncate_file = truncate_cmd->add_option("FILE", file, "Graph file");
  auto* truncate_type = truncate_cmd->add_option("--type", type_text, "Comma-separated matrix sizes, e.g. 2,3,3");
  truncate_file->excludes(truncate_type);
  truncate_cmd->require_option(1, 1);

  auto* iso_cmd = app.add_subcommand("iso", "Whether two graphs have isomorphic Leavitt path algebras");
  iso_cmd->add_option("FILE1", file, "First graph")->required();
  iso_cmd->add_option("FILE2", file2, "Second graph")->required();

  auto* enum_cmd = app.add_subcommand("enum-truncated", "All truncated trees on N vertices");
  enum_cmd->add_option("N", n, "Vertex count")->required();

  auto* max_cmd = app.add_subcommand("extremal-max", "Maximum dimension over trees on N vertices");
  max_cmd->add_option("N", n, "Vertex count")->required();
  max_cmd->add_option("--sinks", sinks, "Fix the number of sinks");

  auto* min_cmd = app.add_subcommand("extremal-min", "Minimum dimension over trees on N vertices");
  min_cmd->add_option("N", n, "Vertex count")->required();
  min_cmd->add_option("--sinks", sinks, "Fix the number of sinks");

  auto* line_count_cmd = app.add_subcommand("line-count", "Number of line-graph algebras on N vertices");
  line_count_cmd->add_option("N", n, "Vertex count")->required();

  auto* line_types_cmd = app.add_subcommand("line-types", "Types of the line-graph algebras on N vertices");
  line_types_cmd->add_option("N", n, "Vertex count")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check every closed form against brute-force enumeration");
  verify_cmd->add_option("--max-n", vopt.max_tree_n, "Largest tree size enumerated")->capture_default_str();
  verify_cmd->add_option("--max-truncated", vopt.max_truncated_n, "Largest truncated-tree count checked")
      ->capture_default_str();
  verify_cmd->add_option("--max-line", vopt.max_line_n, "Largest line-graph census checked")->capture_default_str();
  verify_cmd->add_flag("--allow-large", allow_large,
                       "Lift the tree enumeration cap of 8 vertices (n = 8 takes minutes, n = 9 takes hours)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool json = format == "json";
  try {
    if (*classify_cmd) {
      const auto g = detail::load_graph(file, in);
      out << classification_json(g).dump() << "\n";
      detail::write_dot(dot_path, g);
    } else if (*truncate_cmd) {
      const auto type = *truncate_type ? SemisimpleType::parse(type_text) : semisimple_type(detail::load_graph(file, in));
      const auto tree = truncated_tree(type);
      const auto code = alpha_encode(type);
      if (json) {
        Json o;
        o["type"] = to_json(type);
        o["kappa"] = kappa(type);
        o["alpha"] = code.to_string();
        o["dot"] = to_dot(tree.graph);
        out << o.dump() << "\n";
      } else {
        out << "type " << type.to_string() << "\n"
            << "kappa " << kappa(type) << "\n"
            << "alpha " << code.to_string() << "\n"
            << to_dot(tree.graph);
      }
      detail::write_dot(dot_path, tree.graph);
    } else if (*iso_cmd) {
      const auto a = semisimple_type(detail::load_graph(file, in));
      const auto b = semisimple_type(detail::load_graph(file2, in));
      if (json) {
        Json o;
        o["isomorphic"] = a == b;
        o["types"] = Json::array({to_json(a), to_json(b)});
        out << o.dump() << "\n";
      } else {
        out << (a == b ? "isomorphic" : "not isomorphic") << "\n";
      }
    } else if (*enum_cmd) {
      const auto types = enumerate_truncated_trees(detail::to_size(n, "N"));
      Json list = Json::array();
      for (const auto& t : types) {
        const auto code = alpha_encode(t).to_string();
        if (json) {
          Json item;
          item["alpha"] = code;
          item["type"] = to_json(t);
          list.push_back(std::move(item));
        } else {
          out << code << " " << t.to_string() << "\n";
        }
      }
      if (json) out << list.dump() << "\n";
    } else if (*max_cmd || *min_cmd) {
      const auto size = detail::to_size(n, "N");
      ExtremalReport report;
      if (*max_cmd)
        report = sinks ? max_dim_fixed_sinks(size, detail::to_size(*sinks, "--sinks")) : max_dim(size);
      else
        report = sinks ? min_dim_fixed_sinks(size, detail::to_size(*sinks, "--sinks")) : min_dim(size);
      if (json)
        out << detail::report_json(report).dump() << "\n";
      else
        detail::print_report_text(out, report);
      detail::write_dot(dot_path, report.witness);
    } else if (*line_count_cmd) {
      const auto count = line_algebra_count(n).str();
      if (json) {
        Json o;
        o["n"] = n;
        o["count"] = count;
        out << o.dump() << "\n";
      } else {
        out << count << "\n";
      }
    } else if (*line_types_cmd) {
      const auto types = enumerate_line_types(n);
      if (json) {
        Json o;
        o["n"] = n;
        o["types"] = Json::array();
        for (const auto& t : types) o["types"].push_back(to_json(t));
        out << o.dump() << "\n";
      } else {
        for (const auto& t : types) out << t.to_string() << "\n";
      }
    } else if (*verify_cmd) {
      if (!allow_large) vopt.tree_cap = oracle::kTreeEnumerationCap;
      else vopt.tree_cap = vopt.max_tree_n;
      const auto reports = oracle::run_verification_suite(vopt);
      if (json) {
        Json list = Json::array();
        for (const auto& r : reports) {
          Json item;
          item["claim"] = r.claim;
          item["n"] = r.n;
          item["s"] = r.s ? Json(*r.s) : Json(nullptr);
          item["expected"] = r.expected;
          item["observed"] = r.observed;
          item["pass"] = r.pass;
          if (r.witness_on_failure) item["witness"] = serialize_graph(*r.witness_on_failure);
          list.push_back(std::move(item));
        }
        out << list.dump() << "\n";
      } else {
        out << oracle::format_report_table(reports);
      }
      if (!oracle::all_pass(reports)) return kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace lpa::cli
