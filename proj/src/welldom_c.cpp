#include "welldom/welldom.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "welldom/analysis.hpp"
#include "welldom/errors.hpp"
#include "welldom/fixtures.hpp"
#include "welldom/graph_io.hpp"
#include "welldom/proptest.hpp"

struct wd_graph {
  welldom::Graph graph;
};

namespace {

thread_local std::string last_error;

wd_status fail(wd_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
wd_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const welldom::ParseError& e) {
    return fail(WD_ERR_PARSE, e.what());
  } catch (const welldom::ResourceError& e) {
    return fail(WD_ERR_RESOURCE, e.what());
  } catch (const welldom::DomainError& e) {
    return fail(WD_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WD_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(WD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WD_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

wd_status emit(const welldom::Json& j, char** out) {
  *out = copy_string(j.dump(2) + "\n");
  return WD_OK;
}

welldom::EnumerationBudget resolve_budget(const wd_budget* b) {
  welldom::EnumerationBudget budget = welldom::EnumerationBudget::from_environment();
  if (b != nullptr) {
    if (b->max_order > 0) budget = budget.with_order_limit(b->max_order);
    if (b->max_sets > 0) budget.max_sets = b->max_sets;
  }
  return budget;
}

welldom::AnalysisReport analyze(const wd_graph* g, const wd_budget* b) {
  welldom::AnalysisOptions options;
  options.budget = resolve_budget(b);
  return welldom::analyze(g->graph, options);
}

wd_status require(const void* p, const char* what) {
  return p == nullptr ? fail(WD_ERR_DOMAIN, std::string(what) + " must not be NULL") : WD_OK;
}

wd_status weight_space(const wd_graph* g, const wd_budget* budget, char** json_out, bool dominated) {
  if (g == nullptr || json_out == nullptr) return require(nullptr, "graph and json_out");
  return guarded([&] {
    welldom::AnalysisReport report = analyze(g, budget);
    emit(welldom::weight_space_json(report, dominated), json_out);
    auto match = dominated ? report.wwd_matches_oracle : report.wcw_matches_oracle;
    if (match == false) return fail(WD_ASSERTION_FAILED, "characterized basis differs from oracle");
    if (!(dominated ? report.char_wwd : report.char_wcw) && !report.oracle) {
      return fail(WD_ERR_RESOURCE, "no weight space available: " + report.oracle_skipped.value_or(""));
    }
    return WD_OK;
  });
}

welldom::GraphFormat to_format(wd_format f) {
  switch (f) {
    case WD_FORMAT_EDGELIST: return welldom::GraphFormat::EdgeList;
    case WD_FORMAT_GRAPH6: return welldom::GraphFormat::Graph6;
  }
  throw welldom::DomainError("unknown graph format " + std::to_string(static_cast<int>(f)));
}

}  // namespace

extern "C" {

const char* wd_version(void) { return "1.0.0"; }

const char* wd_last_error(void) { return last_error.c_str(); }

void wd_string_free(char* s) { std::free(s); }

wd_status wd_graph_parse(const char* text, size_t len, wd_format format, wd_graph** out) {
  if (text == nullptr || out == nullptr) return require(nullptr, "text and out");
  return guarded([&] {
    auto fmt = to_format(format);
    *out = new wd_graph{welldom::parse_graph(std::string_view(text, len), fmt)};
    return WD_OK;
  });
}

wd_status wd_graph_from_edges(int32_t order, const int32_t* endpoints, size_t n_edges, wd_graph** out) {
  if (out == nullptr || (endpoints == nullptr && n_edges > 0)) return require(nullptr, "endpoints and out");
  return guarded([&] {
    welldom::Graph g(order);
    for (size_t i = 0; i < n_edges; ++i) g.add_edge(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new wd_graph{std::move(g)};
    return WD_OK;
  });
}

void wd_graph_free(wd_graph* g) { delete g; }

int32_t wd_graph_order(const wd_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

int32_t wd_graph_size(const wd_graph* g) { return g == nullptr ? -1 : g->graph.size(); }

wd_status wd_graph_serialize(const wd_graph* g, wd_format format, char** out) {
  if (g == nullptr || out == nullptr) return require(nullptr, "graph and out");
  return guarded([&] {
    auto fmt = to_format(format);
    *out = copy_string(welldom::serialize_graph(g->graph, fmt));
    return WD_OK;
  });
}

wd_status wd_analyze(const wd_graph* g, const wd_budget* budget, char** json_out) {
  if (g == nullptr || json_out == nullptr) return require(nullptr, "graph and json_out");
  return guarded([&] {
    welldom::AnalysisReport report = analyze(g, budget);
    emit(welldom::to_json(report), json_out);
    if (!report.consistent()) {
      return fail(WD_ASSERTION_FAILED, "characterization and oracle disagree; see diagnostics");
    }
    return WD_OK;
  });
}

wd_status wd_wcw(const wd_graph* g, const wd_budget* budget, char** json_out) {
  return weight_space(g, budget, json_out, false);
}

wd_status wd_wwd(const wd_graph* g, const wd_budget* budget, char** json_out) {
  return weight_space(g, budget, json_out, true);
}

wd_status wd_oracle(const wd_graph* g, const wd_budget* budget, char** json_out) {
  if (g == nullptr || json_out == nullptr) return require(nullptr, "graph and json_out");
  return guarded([&] {
    welldom::OracleResult orc = welldom::run_oracle(g->graph, resolve_budget(budget));
    welldom::Json j = welldom::Json::object();
    j["schema_version"] = welldom::kSchemaVersion;
    j["oracle"] = welldom::oracle_json(orc);
    return emit(j, json_out);
  });
}

wd_status wd_fixtures(int run, char** json_out) {
  if (json_out == nullptr) return require(nullptr, "json_out");
  return guarded([&] {
    welldom::Json j = welldom::Json::object();
    j["schema_version"] = welldom::kSchemaVersion;
    welldom::Json list = welldom::Json::array();
    bool all = true;
    for (const auto& f : welldom::builtin_fixtures()) {
      welldom::Json item = welldom::Json::object();
      item["name"] = f.name;
      item["order"] = f.graph.order();
      item["graph6"] = welldom::serialize_graph(f.graph, welldom::GraphFormat::Graph6);
      item["expectations"] = f.expected.size();
      if (run != 0) {
        welldom::FixtureResult r = welldom::run_fixture(f);
        all = all && r.passed;
        item["result"] = welldom::to_json(r);
      }
      list.push_back(item);
    }
    j["fixtures"] = list;
    if (run != 0) j["passed"] = all;
    emit(j, json_out);
    return all ? WD_OK : fail(WD_ASSERTION_FAILED, "fixture expectations failed");
  });
}

wd_status wd_fixture_graph(const char* name, wd_graph** out) {
  if (name == nullptr || out == nullptr) return require(nullptr, "name and out");
  return guarded([&] {
    *out = new wd_graph{welldom::find_fixture(name).graph};
    return WD_OK;
  });
}

wd_status wd_proptest(const wd_proptest_config* config, const wd_budget* budget, char** json_out) {
  if (config == nullptr || json_out == nullptr) return require(nullptr, "config and json_out");
  return guarded([&] {
    welldom::GeneratorConfig cfg;
    cfg.count = config->count;
    cfg.max_n = config->max_n;
    cfg.seed = config->seed;
    cfg.connected = config->connected_only != 0;
    for (size_t i = 0; i < config->n_forbidden; ++i) cfg.forbidden_cycles.push_back(config->forbidden[i]);
    welldom::PropertySummary s = welldom::run_properties(cfg, resolve_budget(budget));
    emit(welldom::to_json(s), json_out);
    return s.passed() ? WD_OK : fail(WD_ASSERTION_FAILED, "property violations found");
  });
}

}  // extern "C"
