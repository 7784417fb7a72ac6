// welldom command-line tool. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "welldom/welldom.h"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kAssertion = 1, kUsage = 2, kResource = 3 };

int exit_code(wd_status s) {
  switch (s) {
    case WD_OK: return kOk;
    case WD_ASSERTION_FAILED: return kAssertion;
    case WD_ERR_PARSE:
    case WD_ERR_DOMAIN: return kUsage;
    case WD_ERR_RESOURCE: return kResource;
    case WD_ERR_INTERNAL: break;
  }
  return kAssertion;
}

struct GraphDeleter {
  void operator()(wd_graph* g) const { wd_graph_free(g); }
};
using GraphHandle = std::unique_ptr<wd_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { wd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphInput {
  std::string path;
  std::string format;  // empty: infer from extension
};

struct Common {
  GraphInput input;
  bool as_json = false;
  int budget = 0;
};

int report_error(wd_status s) {
  std::cerr << "welldom: " << wd_last_error() << "\n";
  return exit_code(s);
}

wd_format infer_format(const GraphInput& in) {
  if (in.format == "graph6") return WD_FORMAT_GRAPH6;
  if (in.format == "edgelist") return WD_FORMAT_EDGELIST;
  auto ends_with = [&](const std::string& suffix) {
    return in.path.size() >= suffix.size() &&
           in.path.compare(in.path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".g6") || ends_with(".graph6") ? WD_FORMAT_GRAPH6 : WD_FORMAT_EDGELIST;
}

// Returns an exit code; fills `out` on success.
int load_graph(const GraphInput& in, GraphHandle& out) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) {
      std::cerr << "welldom: cannot open '" << in.path << "'\n";
      return kUsage;
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  wd_graph* g = nullptr;
  wd_status s = wd_graph_parse(text.data(), text.size(), infer_format(in), &g);
  if (s != WD_OK) return report_error(s);
  out.reset(g);
  return kOk;
}

std::string set_text(const json& j) {
  if (j.is_null()) return "n/a";
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
  return out + "}";
}

std::string value_text(const json& j) {
  if (j.is_null()) return "n/a";
  return j.dump();
}

void print_basis(const json& section, const std::string& indent) {
  if (section.is_null() || section["basis"].is_null()) {
    std::cout << indent << "unavailable\n";
    return;
  }
  std::cout << indent << "dimension " << section["dimension"].get<int>() << "\n";
  for (const auto& row : section["basis"]) {
    std::cout << indent << "  (";
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string q = row[i].get<std::string>();
      if (q.size() > 2 && q.ends_with("/1")) q.resize(q.size() - 2);
      std::cout << (i ? ", " : "") << q;
    }
    std::cout << ")\n";
  }
}

void print_analysis(const json& r) {
  const auto& g = r["graph"];
  std::cout << "graph: " << g["order"] << " vertices, " << g["size"] << " edges, "
            << (r["connected"].get<bool>() ? "connected" : "disconnected") << "\n";
  std::cout << "cycles:";
  for (const auto& [k, present] : r["contains_cycle"].items()) {
    std::cout << " C" << k << (present.get<bool>() ? "+" : "-");
  }
  std::cout << "\n";
  const auto& s = r["structure"];
  std::cout << "L = " << set_text(s["L"]) << ", L* = " << set_text(s["L_star"]) << "\n";
  std::cout << "family F: " << (s["family_f"].is_null() ? "no" : "yes, centers " + set_text(s["family_f"]["centers"]))
            << "\n";
  const auto& sum = r["summary"];
  std::cout << "well-covered: " << value_text(sum["well_covered"])
            << ", well-dominated: " << value_text(sum["well_dominated"]) << "\n";
  std::cout << "dim WCW = " << value_text(sum["wcw_dim"]) << ", dim WWD = " << value_text(sum["wwd_dim"]) << "\n";
  if (!r["oracle"].is_null()) {
    const auto& o = r["oracle"];
    std::cout << "oracle: gamma=" << o["gamma"] << " i=" << o["i"] << " alpha=" << o["alpha"]
              << " Gamma=" << o["upper_gamma"] << "\n";
  } else {
    std::cout << "oracle skipped: " << value_text(r["oracle_skipped"]) << "\n";
  }
  for (const auto& [name, v] : r["cross_checks"].items()) {
    if (!v.is_null()) std::cout << "check " << name << ": " << (v.get<bool>() ? "ok" : "FAILED") << "\n";
  }
  for (const auto& d : r["diagnostics"]) std::cout << "note: " << d.get<std::string>() << "\n";
}

void print_weight_space(const json& r) {
  std::cout << r["space"].get<std::string>() << " by characterization:\n";
  if (r["characterization"]["applicable"].get<bool>()) {
    print_basis(r["characterization"], "  ");
  } else {
    std::cout << "  not applicable";
    for (const auto& reason : r["characterization"]["reasons"]) std::cout << "; " << reason.get<std::string>();
    std::cout << "\n";
  }
  std::cout << r["space"].get<std::string>() << " by enumeration:\n";
  print_basis(r["oracle"], "  ");
  if (!r["matches_oracle"].is_null()) {
    std::cout << "agreement: " << (r["matches_oracle"].get<bool>() ? "yes" : "NO") << "\n";
  }
}

void print_oracle(const json& r) {
  const auto& o = r["oracle"];
  std::cout << "maximal independent sets: " << o["maximal_independent_sets"] << "\n"
            << "minimal dominating sets:  " << o["minimal_dominating_sets"] << "\n"
            << "gamma=" << o["gamma"] << " i=" << o["i"] << " alpha=" << o["alpha"]
            << " Gamma=" << o["upper_gamma"] << "\n"
            << "well-covered: " << o["well_covered"] << ", well-dominated: " << o["well_dominated"] << "\n";
  std::cout << "WCW:\n";
  print_basis(o["wcw"], "  ");
  std::cout << "WWD:\n";
  print_basis(o["wwd"], "  ");
}

void print_fixtures(const json& r) {
  for (const auto& f : r["fixtures"]) {
    std::cout << f["name"].get<std::string>() << " (" << f["order"] << " vertices, " << f["graph6"].get<std::string>()
              << ")";
    if (f.contains("result")) {
      const auto& res = f["result"];
      std::cout << ": " << (res["passed"].get<bool>() ? "PASS" : "FAIL");
      for (const auto& c : res["checks"]) {
        if (!c["passed"].get<bool>()) {
          std::cout << "\n  " << c["key"].get<std::string>() << " [" << c["provenance"].get<std::string>()
                    << "]: " << c["detail"].get<std::string>();
        }
      }
    }
    std::cout << "\n";
  }
}

void print_proptest(const json& r) {
  std::cout << r["graphs"] << " graphs (" << r["connected"] << " connected)\n";
  for (const auto& [name, c] : r["checks"].items()) {
    std::cout << "  " << name << ": " << c["run"] << " run, " << c["failures"] << " failures"
              << (c["informational"].get<bool>() ? " (informational)" : "") << "\n";
  }
  for (const auto& e : r["failure_examples"]) std::cout << "  counterexample " << e.get<std::string>() << "\n";
  std::cout << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int finish(wd_status s, char* raw, bool as_json, void (*print)(const json&)) {
  OwnedString owned(raw);
  if (owned) {
    if (as_json) {
      std::cout << owned.get();
    } else {
      print(json::parse(owned.get()));
    }
  }
  if (s != WD_OK) return report_error(s);
  return kOk;
}

using GraphCommand = wd_status (*)(const wd_graph*, const wd_budget*, char**);

int run_graph_command(const Common& c, GraphCommand command, void (*print)(const json&)) {
  GraphHandle g;
  if (int code = load_graph(c.input, g); code != kOk) return code;
  wd_budget budget{c.budget, 0};
  char* out = nullptr;
  wd_status s = command(g.get(), c.budget > 0 ? &budget : nullptr, &out);
  return finish(s, out, c.as_json, print);
}

void add_graph_options(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.input.path, "graph file ('-' for standard input)")->required();
  cmd->add_option("--format", c.input.format, "edgelist or graph6 (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_flag("--json", c.as_json, "print the JSON report");
  cmd->add_option("--budget", c.budget, "vertex limit for the exhaustive enumerators")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-covered and well-dominated graph analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wd_version()));

  Common analyze_opts, wcw_opts, wwd_opts, oracle_opts;
  add_graph_options(app.add_subcommand("analyze", "structure, recognition, weight spaces and cross-checks"),
                    analyze_opts);
  add_graph_options(app.add_subcommand("wcw", "weight space WCW(G)"), wcw_opts);
  add_graph_options(app.add_subcommand("wwd", "weight space WWD(G)"), wwd_opts);
  add_graph_options(app.add_subcommand("oracle", "exhaustive enumeration results"), oracle_opts);

  bool fixtures_run = false;
  bool fixtures_json = false;
  auto* fixtures = app.add_subcommand("fixtures", "list (or --run) the builtin fixtures");
  fixtures->add_flag("--run", fixtures_run, "evaluate every fixture expectation");
  fixtures->add_flag("--json", fixtures_json, "print JSON");

  wd_proptest_config prop{100, 10, 1, nullptr, 0, 0};
  std::vector<int32_t> forbid;
  bool prop_json = false;
  bool prop_connected = false;
  int prop_budget = 0;
  auto* proptest = app.add_subcommand("proptest", "oracle-backed property run on random graphs");
  proptest->add_option("--count", prop.count, "number of graphs")->check(CLI::NonNegativeNumber);
  proptest->add_option("--max-n", prop.max_n, "largest graph order")->check(CLI::Range(1, 24));
  proptest->add_option("--seed", prop.seed, "random seed");
  proptest->add_option("--forbid", forbid, "forbidden cycle lengths, e.g. 4,5,6")->delimiter(',');
  proptest->add_flag("--connected", prop_connected, "generate connected graphs only");
  proptest->add_flag("--json", prop_json, "print JSON");
  proptest->add_option("--budget", prop_budget, "vertex limit for the exhaustive enumerators")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (app.got_subcommand("analyze")) return run_graph_command(analyze_opts, wd_analyze, print_analysis);
  if (app.got_subcommand("wcw")) return run_graph_command(wcw_opts, wd_wcw, print_weight_space);
  if (app.got_subcommand("wwd")) return run_graph_command(wwd_opts, wd_wwd, print_weight_space);
  if (app.got_subcommand("oracle")) return run_graph_command(oracle_opts, wd_oracle, print_oracle);
  if (app.got_subcommand("fixtures")) {
    char* out = nullptr;
    wd_status s = wd_fixtures(fixtures_run ? 1 : 0, &out);
    return finish(s, out, fixtures_json, print_fixtures);
  }
  prop.forbidden = forbid.data();
  prop.n_forbidden = forbid.size();
  prop.connected_only = prop_connected ? 1 : 0;
  wd_budget budget{prop_budget, 0};
  char* out = nullptr;
  wd_status s = wd_proptest(&prop, prop_budget > 0 ? &budget : nullptr, &out);
  return finish(s, out, prop_json, print_proptest);
}
