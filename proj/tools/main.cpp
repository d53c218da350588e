#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aicbnb/cardinality.hpp"
#include "aicbnb/dataset.hpp"
#include "aicbnb/dependencies.hpp"
#include "aicbnb/enumerate.hpp"
#include "aicbnb/errors.hpp"
#include "aicbnb/gram.hpp"
#include "aicbnb/report.hpp"
#include "aicbnb/solver.hpp"
#include "aicbnb/stepwise.hpp"

using namespace aicbnb;
using nlohmann::json;

namespace {

struct DataOpts {
  std::string path;
  std::string response = "-1";  // last column
  bool raw = false;
};

struct LoadedData {
  Dataset data;           // standardized unless --raw
  std::string name;       // file stem, for table rows
  std::vector<int> constants;
};

LoadedData load_data(const DataOpts& opts) {
  Dataset original = load_csv(opts.path, opts.response);
  std::vector<int> constants = constant_predictors(original);
  Dataset prepared = opts.raw ? std::move(original) : standardize(original);
  std::string name = std::filesystem::path(opts.path).stem().string();
  return LoadedData{std::move(prepared), std::move(name), std::move(constants)};
}

json dataset_json(const DataOpts& opts, const LoadedData& loaded) {
  json j{{"path", opts.path},
         {"name", loaded.name},
         {"n", loaded.data.n()},
         {"p", loaded.data.p()},
         {"response", loaded.data.response_name()},
         {"standardized", loaded.data.standardized()},
         {"constant_predictors", loaded.constants}};
  if (loaded.data.standardized()) j["standardization"] = to_json(loaded.data.standardization());
  return j;
}

void emit_json(const std::string& path, const json& doc) {
  if (!path.empty()) write_report(path, doc);
}

void print_solve_header() {
  std::printf("%-20s %12s %4s %9s %8s %10s\n", "name", "AIC", "k", "time_s", "gap%", "nodes");
}

void print_solve_row(const std::string& name, const SolveReport& rep, int n) {
  double aic = rep.best ? full_aic(rep.best->obj, n) : std::numeric_limits<double>::quiet_NaN();
  int k = rep.best ? rep.best->obj.k : -1;
  std::printf("%-20s %12.2f %4d %9.2f %8.2f %10lld\n", name.c_str(), aic, k, rep.wall_seconds,
              rep.gap, static_cast<long long>(rep.nodes));
}

struct SolveOpts {
  DataOpts data;
  std::string branching = "auto";
  int pool_size = 10;
  int stepwise_depth = 10;
  double time_limit = 5000.0;
  std::int64_t node_limit = -1;
  std::string order = "best-first";
  std::string json_path;
  std::string trace_path;
  bool enumerate_check = false;
};

SolverConfig make_config(const SolveOpts& opts, const std::vector<int>& constants) {
  SolverConfig cfg;
  cfg.rule = branch_rule_from_string(opts.branching);
  cfg.pool_size = opts.pool_size;
  cfg.stepwise_depth = opts.stepwise_depth;
  cfg.time_limit_seconds = opts.time_limit;
  cfg.node_limit = opts.node_limit;
  if (opts.order == "best-first")
    cfg.order = SearchOrder::kBestFirst;
  else if (opts.order == "depth-first")
    cfg.order = SearchOrder::kDepthFirst;
  else
    throw UsageError("unknown order '" + opts.order + "' (expected best-first or depth-first)");
  cfg.forced_zero = constants;
  return cfg;
}

int run_solve(const SolveOpts& opts) {
  LoadedData loaded = load_data(opts.data);
  GramSystem g = build_gram(loaded.data);
  DependencyCollection deps = find_dependencies(loaded.data);
  SolverConfig cfg = make_config(opts, loaded.constants);

  std::ofstream trace_out;
  if (!opts.trace_path.empty()) {
    trace_out.open(opts.trace_path);
    if (!trace_out) throw DataError("cannot write trace to " + opts.trace_path);
    cfg.trace = [&trace_out](const NodeTraceRecord& rec) {
      json j{{"z1", to_json(rec.z1)},          {"z0", to_json(rec.z0)},
             {"depth", rec.depth},             {"lower", encode_number(rec.lower)},
             {"inherited", rec.inherited},     {"global_lower", encode_number(rec.global_lower)},
             {"action", rec.action},           {"branch_index", rec.branch_index}};
      trace_out << j.dump() << "\n";
    };
  }

  SolveReport rep = solve(g, deps, cfg);

  print_solve_header();
  print_solve_row(loaded.name, rep, g.n());
  if (rep.status != SolveStatus::kOptimal)
    std::printf("status: %s (lower bound %.6f, gap %.2f%%)\n", to_string(rep.status),
                rep.lower_bound, rep.gap);

  json doc{{"dataset", dataset_json(opts.data, loaded)},
           {"settings", settings_json(cfg)},
           {"result", to_json(rep, g.n())}};

  bool check_failed = false;
  if (opts.enumerate_check) {
    EnumerationResult oracle = enumerate_all(g, cfg.enumeration_cap);
    bool limited = rep.status != SolveStatus::kOptimal;
    bool agree = rep.best && std::abs(rep.best->obj.value - oracle.best.value) <= 1e-6;
    if (limited ? (rep.best && rep.best->obj.value >= oracle.best.value - 1e-6) : agree) {
      std::printf("oracle-check: ok\n");
      doc["oracle_check"] = "ok";
    } else {
      std::printf("oracle-check: MISMATCH (solver %.9f vs oracle %.9f)\n",
                  rep.best ? rep.best->obj.value : std::numeric_limits<double>::quiet_NaN(),
                  oracle.best.value);
      doc["oracle_check"] = "mismatch";
      check_failed = true;
    }
  }

  emit_json(opts.json_path, make_report("solve", std::move(doc)));
  if (check_failed) throw InternalError("solver disagrees with the enumeration oracle");
  return 0;
}

struct StepwiseOpts {
  DataOpts data;
  std::string direction = "both";
  std::string json_path;
};

int run_stepwise(const StepwiseOpts& opts) {
  if (opts.direction != "forward" && opts.direction != "backward" && opts.direction != "both")
    throw UsageError("unknown direction '" + opts.direction +
                     "' (expected forward, backward, or both)");
  LoadedData loaded = load_data(opts.data);
  GramSystem g = build_gram(loaded.data);
  IndexSet excluded;
  for (int j : loaded.constants) excluded.insert(j);

  json doc{{"dataset", dataset_json(opts.data, loaded)}};
  std::printf("%-20s %-8s %12s %4s %12s\n", "name", "pass", "AIC", "k", "evaluations");
  auto show = [&](const char* label, const StepwiseResult& res) {
    std::printf("%-20s %-8s %12.2f %4d %12ld\n", loaded.name.c_str(), label,
                full_aic(res.obj, g.n()), res.obj.k, res.evaluations);
  };
  if (opts.direction != "backward") {
    StepwiseResult fwd = sw_forward(g, excluded);
    show("SW+", fwd);
    doc["forward"] = to_json(fwd, g.n());
  }
  if (opts.direction != "forward") {
    StepwiseResult bwd = sw_backward(g, excluded);
    show("SW-", bwd);
    doc["backward"] = to_json(bwd, g.n());
  }

  emit_json(opts.json_path, make_report("stepwise", std::move(doc)));
  return 0;
}

struct CardinalityOpts {
  DataOpts data;
  std::string mode = "fast-eq";
  std::string json_path;
};

int run_cardinality(const CardinalityOpts& opts) {
  LoadedData loaded = load_data(opts.data);
  GramSystem g = build_gram(loaded.data);
  DependencyCollection deps = find_dependencies(loaded.data);

  SweepReport rep;
  if (opts.mode == "naive")
    rep = sweep_naive(g, deps);
  else if (opts.mode == "fast-eq")
    rep = sweep_fast(g, deps, CardinalityMode::kExact);
  else if (opts.mode == "fast-le")
    rep = sweep_fast(g, deps, CardinalityMode::kAtMost);
  else
    throw UsageError("unknown mode '" + opts.mode + "' (expected naive, fast-eq, or fast-le)");

  std::printf("k,eta,objective,feasible,nodes\n");
  for (const CardinalityResult& r : rep.per_k)
    std::printf("%d,%.17g,%.17g,%d,%lld\n", r.k, r.eta, r.objective, r.feasible ? 1 : 0,
                static_cast<long long>(r.nodes));
  if (rep.best)
    std::printf("best: AIC %.2f k %d (%d per-k solves, stop_k %d)\n",
                full_aic(rep.best->obj, g.n()), rep.best->obj.k, rep.solves, rep.stop_k);

  json doc{{"dataset", dataset_json(opts.data, loaded)},
           {"mode", opts.mode},
           {"sweep", to_json(rep, g.n())}};
  emit_json(opts.json_path, make_report("cardinality", std::move(doc)));
  return 0;
}

struct EnumerateOpts {
  DataOpts data;
  std::string table_path;
  std::string json_path;
};

int run_enumerate(const EnumerateOpts& opts) {
  LoadedData loaded = load_data(opts.data);
  GramSystem g = build_gram(loaded.data);
  EnumerationResult res = enumerate_all(g, 20, !opts.table_path.empty());

  if (!opts.table_path.empty()) {
    std::ofstream out(opts.table_path);
    if (!out) throw DataError("cannot write table to " + opts.table_path);
    out << "mask,k,subset,rss,objective,aic\n";
    char line[256];
    for (const EnumerationRow& row : res.table) {
      std::string subset;
      for (int j = 1; j <= g.p(); ++j)
        if (row.mask >> (j - 1) & 1u) {
          if (!subset.empty()) subset += ';';
          subset += std::to_string(j);
        }
      std::snprintf(line, sizeof line, "%llu,%d,%s,%.17g,%.17g,%.17g\n",
                    static_cast<unsigned long long>(row.mask), row.k, subset.c_str(), row.rss,
                    row.objective, row.aic);
      out << line;
    }
    if (!out) throw DataError("failed while writing table to " + opts.table_path);
  }

  std::printf("best: AIC %.2f k %d subset %s (%zu subsets)\n", full_aic(res.best, g.n()),
              res.best.k, res.best_subset.to_string().c_str(), std::size_t{1} << g.p());

  json doc{{"dataset", dataset_json(opts.data, loaded)}, {"result", to_json(res, g.n())}};
  emit_json(opts.json_path, make_report("enumerate", std::move(doc)));
  return 0;
}

struct BenchOpts {
  std::string manifest;
  std::string json_path;
};

int run_bench(const BenchOpts& opts) {
  std::ifstream in(opts.manifest);
  if (!in) throw DataError("cannot read manifest " + opts.manifest);
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("manifest " + opts.manifest + " is not valid JSON: " + e.what());
  }
  if (!manifest.contains("datasets") || !manifest["datasets"].is_array() ||
      manifest["datasets"].empty())
    throw UsageError("manifest needs a nonempty 'datasets' array");

  std::vector<std::string> rules = {"std", "mfb", "sb"};
  if (manifest.contains("rules")) rules = manifest["rules"].get<std::vector<std::string>>();
  for (const std::string& r : rules) branch_rule_from_string(r);  // validate early

  SolveOpts base;
  base.time_limit = manifest.value("time_limit_seconds", 5000.0);
  base.node_limit = manifest.value("node_limit", static_cast<std::int64_t>(-1));
  base.data.raw = manifest.value("raw", false);

  std::printf("%-20s %-5s %12s %4s %9s %10s %8s %s\n", "name", "rule", "AIC", "k", "time_s",
              "nodes", "gap%", "status");
  json rows = json::array();
  std::map<std::string, std::pair<double, int>> node_totals;  // rule -> (sum, count)

  for (const json& entry : manifest["datasets"]) {
    DataOpts data = base.data;
    std::string name;
    if (entry.is_string()) {
      data.path = entry.get<std::string>();
    } else {
      data.path = entry.at("path").get<std::string>();
      data.response = entry.value("response", data.response);
      name = entry.value("name", "");
    }
    if (name.empty()) name = std::filesystem::path(data.path).stem().string();

    for (const std::string& rule : rules) {
      json row{{"name", name}, {"rule", rule}};
      try {
        SolveOpts cell = base;
        cell.data = data;
        cell.branching = rule;
        LoadedData loaded = load_data(cell.data);
        GramSystem g = build_gram(loaded.data);
        DependencyCollection deps = find_dependencies(loaded.data);
        SolveReport rep = solve(g, deps, make_config(cell, loaded.constants));

        double aic = rep.best ? full_aic(rep.best->obj, g.n())
                              : std::numeric_limits<double>::quiet_NaN();
        std::printf("%-20s %-5s %12.2f %4d %9.2f %10lld %8.2f %s\n", name.c_str(), rule.c_str(),
                    aic, rep.best ? rep.best->obj.k : -1, rep.wall_seconds,
                    static_cast<long long>(rep.nodes), rep.gap, to_string(rep.status));
        row["result"] = to_json(rep, g.n());
        auto& [sum, count] = node_totals[rule];
        sum += static_cast<double>(rep.nodes);
        ++count;
      } catch (const std::exception& e) {
        std::printf("%-20s %-5s ERROR: %s\n", name.c_str(), rule.c_str(), e.what());
        row["error"] = e.what();
      }
      rows.push_back(std::move(row));
    }
  }

  json means = json::object();
  std::string trend = "mean nodes:";
  for (const std::string& rule : rules) {
    auto it = node_totals.find(rule);
    if (it == node_totals.end() || it->second.second == 0) continue;
    double mean = it->second.first / it->second.second;
    means[rule] = mean;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s=%.1f", rule.c_str(), mean);
    trend += buf;
  }
  if (!means.empty()) std::printf("%s\n", trend.c_str());

  emit_json(opts.json_path,
            make_report("bench", json{{"manifest", opts.manifest},
                                      {"rows", std::move(rows)},
                                      {"mean_nodes", std::move(means)}}));
  return 0;
}

void add_data_options(CLI::App* cmd, DataOpts& data) {
  cmd->add_option("dataset", data.path, "CSV file with a header row")->required();
  cmd->add_option("--response", data.response,
                  "response column, by name or 0-based position (default: last)");
  cmd->add_flag("--raw", data.raw, "skip standardization of columns");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact AIC-optimal subset selection for linear regression"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* cmd_solve = app.add_subcommand("solve", "branch-and-bound over all subsets");
  add_data_options(cmd_solve, solve_opts.data);
  cmd_solve->add_option("--branching", solve_opts.branching, "auto, std, mfb, or sb");
  cmd_solve->add_option("--pool-size", solve_opts.pool_size, "solutions kept for mfb");
  cmd_solve->add_option("--stepwise-depth", solve_opts.stepwise_depth,
                        "max node depth running stepwise bounds");
  cmd_solve->add_option("--time-limit", solve_opts.time_limit, "wall-clock limit in seconds");
  cmd_solve->add_option("--node-limit", solve_opts.node_limit, "max nodes (negative: unlimited)");
  cmd_solve->add_option("--order", solve_opts.order, "best-first or depth-first");
  cmd_solve->add_option("--json", solve_opts.json_path, "write a JSON report here");
  cmd_solve->add_option("--trace", solve_opts.trace_path, "write a JSON-lines node trace here");
  cmd_solve->add_flag("--enumerate-check", solve_opts.enumerate_check,
                      "cross-check against exhaustive enumeration");

  StepwiseOpts sw_opts;
  CLI::App* cmd_sw = app.add_subcommand("stepwise", "greedy forward/backward selection");
  add_data_options(cmd_sw, sw_opts.data);
  cmd_sw->add_option("--direction", sw_opts.direction, "forward, backward, or both");
  cmd_sw->add_option("--json", sw_opts.json_path, "write a JSON report here");

  CardinalityOpts card_opts;
  CLI::App* cmd_card = app.add_subcommand("cardinality", "best subset per cardinality");
  add_data_options(cmd_card, card_opts.data);
  cmd_card->add_option("--mode", card_opts.mode, "naive, fast-eq, or fast-le");
  cmd_card->add_option("--json", card_opts.json_path, "write a JSON report here");

  EnumerateOpts enum_opts;
  CLI::App* cmd_enum = app.add_subcommand("enumerate", "exhaustive oracle over all subsets");
  add_data_options(cmd_enum, enum_opts.data);
  cmd_enum->add_option("--full-table", enum_opts.table_path, "write every subset as CSV here");
  cmd_enum->add_option("--json", enum_opts.json_path, "write a JSON report here");

  BenchOpts bench_opts;
  CLI::App* cmd_bench = app.add_subcommand("bench", "run a manifest of datasets under each rule");
  cmd_bench->add_option("manifest", bench_opts.manifest, "JSON manifest of datasets and rules")
      ->required();
  cmd_bench->add_option("--json", bench_opts.json_path, "write a JSON report here");

  try {
    app.parse(argc, argv);
    if (*cmd_solve) return run_solve(solve_opts);
    if (*cmd_sw) return run_stepwise(sw_opts);
    if (*cmd_card) return run_cardinality(card_opts);
    if (*cmd_enum) return run_enumerate(enum_opts);
    if (*cmd_bench) return run_bench(bench_opts);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
