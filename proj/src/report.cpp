#include "aicbnb/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "aicbnb/errors.hpp"

namespace aicbnb {

using nlohmann::json;

json encode_number(double v) {
  if (std::isnan(v)) throw InternalError("refusing to serialize NaN");
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

double decode_number(const json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw DataError("unexpected numeric string '" + s + "' in report");
  }
  return j.get<double>();
}

json to_json(const IndexSet& s) {
  json arr = json::array();
  s.for_each([&](int j) { arr.push_back(j); });
  return arr;
}

json to_json(const ObjectiveValue& v, int n) {
  return json{{"value", encode_number(v.value)},
              {"k", v.k},
              {"clamped", v.clamped},
              {"full_aic", encode_number(full_aic(v, n))}};
}

json to_json(const Incumbent& inc, int n) {
  json beta = json::array();
  for (double b : inc.beta) beta.push_back(encode_number(b));
  return json{{"subset", to_json(inc.subset)}, {"objective", to_json(inc.obj, n)}, {"beta", beta}};
}

json to_json(const SolveReport& r, int n) {
  json j{{"status", to_string(r.status)},
         {"rule", to_string(r.rule_used)},
         {"nodes", r.nodes},
         {"relaxations", r.relaxations},
         {"wall_seconds", encode_number(r.wall_seconds)},
         {"lower_bound", encode_number(r.lower_bound)},
         {"gap_percent", encode_number(r.gap)},
         {"meta", r.meta}};
  if (r.best) j["best"] = to_json(*r.best, n);
  return j;
}

json to_json(const StepwiseResult& r, int n) {
  json moves = json::array();
  for (const StepwiseMove& m : r.moves)
    moves.push_back(json{{"op", m.added ? "add" : "remove"},
                         {"index", m.index},
                         {"objective", encode_number(m.objective)}});
  json beta = json::array();
  for (double b : r.beta) beta.push_back(encode_number(b));
  return json{{"subset", to_json(r.subset)},
              {"objective", to_json(r.obj, n)},
              {"beta", beta},
              {"moves", moves},
              {"evaluations", r.evaluations}};
}

json to_json(const CardinalityResult& r, int n) {
  json j{{"k", r.k},
         {"eta", encode_number(r.eta)},
         {"objective", encode_number(r.objective)},
         {"feasible", r.feasible},
         {"nodes", r.nodes},
         {"subset", to_json(r.subset)}};
  if (r.feasible) j["full_aic"] = encode_number(full_aic(r.objective, n));
  return j;
}

json to_json(const SweepReport& r, int n) {
  json per_k = json::array();
  for (const CardinalityResult& c : r.per_k) per_k.push_back(to_json(c, n));
  json j{{"per_k", per_k},
         {"solves", r.solves},
         {"theta_hat", encode_number(r.theta_hat)},
         {"stop_k", r.stop_k},
         {"wall_seconds", encode_number(r.wall_seconds)}};
  if (r.best) j["best"] = to_json(*r.best, n);
  return j;
}

json to_json(const EnumerationResult& r, int n) {
  return json{{"best_subset", to_json(r.best_subset)},
              {"best", to_json(r.best, n)},
              {"table_rows", r.table.size()}};
}

json to_json(const Standardization& s) {
  auto scaling = [](const ColumnScaling& c) {
    return json{{"mean", encode_number(c.mean)},
                {"scale", encode_number(c.scale)},
                {"constant", c.constant}};
  };
  json preds = json::array();
  for (const ColumnScaling& c : s.predictors) preds.push_back(scaling(c));
  return json{{"divisor", "n-1"}, {"predictors", preds}, {"response", scaling(s.response)}};
}

json settings_json(const SolverConfig& cfg) {
  return json{{"branching", to_string(cfg.rule)},
              {"pool_size", cfg.pool_size},
              {"stepwise_depth", cfg.stepwise_depth},
              {"node_limit", cfg.node_limit},
              {"time_limit_seconds", encode_number(cfg.time_limit_seconds)},
              {"order", cfg.order == SearchOrder::kBestFirst ? "best-first" : "depth-first"},
              {"prune_tol", encode_number(cfg.prune_tol)},
              {"zero_tol", encode_number(cfg.zero_tol)},
              {"enumeration_cap", cfg.enumeration_cap},
              {"strong_cap", cfg.strong_cap},
              {"disable_pruning", cfg.disable_pruning},
              {"dynamic_rank_fixing", cfg.dynamic_rank_fixing}};
}

json make_report(const std::string& kind, json payload) {
  payload["schema"] = kReportSchema;
  payload["kind"] = kind;
  return payload;
}

void write_report(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write report to " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw DataError("failed while writing report to " + path);
}

}  // namespace aicbnb
