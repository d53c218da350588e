#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aicbnb/branching.hpp"
#include "aicbnb/dependencies.hpp"
#include "aicbnb/gram.hpp"
#include "aicbnb/node.hpp"

namespace aicbnb {

enum class SearchOrder { kBestFirst, kDepthFirst };

enum class SolveStatus { kOptimal, kNodeLimit, kTimeLimit };

/// One line of the node trace: the node as processed (after dependency
/// fixing), the bound in effect, and what happened to it.
struct NodeTraceRecord {
  IndexSet z1;
  IndexSet z0;
  int depth = 0;
  double lower = 0.0;
  bool inherited = false;
  double global_lower = 0.0;
  std::string action;     // "pruned", "leaf", "branched"
  int branch_index = -1;  // set when action == "branched"
};

struct SolverConfig {
  BranchRule rule = BranchRule::kAuto;
  int pool_size = 10;
  int stepwise_depth = 10;           // max depth at which stepwise bounding runs
  std::int64_t node_limit = -1;      // negative: unlimited
  double time_limit_seconds = 5000.0;
  SearchOrder order = SearchOrder::kBestFirst;
  double prune_tol = 1e-9;           // relative pruning slack
  double zero_tol = 1e-9;            // coefficient-is-zero threshold
  int enumeration_cap = 20;
  int strong_cap = -1;               // strong branching only when |Z| <= cap; negative: always
  bool disable_pruning = false;      // exhaustive mode for validation
  bool dynamic_rank_fixing = false;  // per-node rank checks instead of the precomputed collection only
  std::vector<int> forced_zero;      // predictors fixed out at the root (constant columns)
  std::function<void(const NodeTraceRecord&)> trace;
};

struct SolveReport {
  std::optional<Incumbent> best;
  double lower_bound = 0.0;
  double gap = 0.0;  // percent
  std::int64_t nodes = 0;
  std::int64_t relaxations = 0;
  double wall_seconds = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  BranchRule rule_used = BranchRule::kStandard;
  std::map<std::string, std::string> meta;
};

/// Branch-and-bound minimization of n*log(rss) + 2k over predictor subsets.
SolveReport solve(const GramSystem& g, const DependencyCollection& deps, const SolverConfig& cfg);

const char* to_string(SolveStatus status);
const char* to_string(BranchRule rule);
BranchRule branch_rule_from_string(const std::string& name);

}  // namespace aicbnb
