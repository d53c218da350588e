#include "aicbnb/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <vector>

#include "aicbnb/errors.hpp"
#include "aicbnb/pool.hpp"
#include "aicbnb/stepwise.hpp"

namespace aicbnb {

namespace {

constexpr double kIncumbentTol = 1e-9;  // required strict improvement

struct QueueNode {
  NodeState state;
  std::int64_t id = 0;
};

// Best-first: smallest bound, then deepest, then earliest created.
// Depth-first: plain LIFO (largest id first).
struct NodeOrder {
  SearchOrder order;
  bool operator()(const QueueNode& a, const QueueNode& b) const {
    if (order == SearchOrder::kDepthFirst) return a.id > b.id;
    if (a.state.lower != b.state.lower) return a.state.lower < b.state.lower;
    if (a.state.depth != b.state.depth) return a.state.depth > b.state.depth;
    return a.id < b.id;
  }
};

void validate(const SolverConfig& cfg, int p) {
  if (cfg.pool_size < 1 || cfg.pool_size > 100)
    throw UsageError("pool size must be in [1, 100], got " + std::to_string(cfg.pool_size));
  if (cfg.prune_tol < 0.0 || cfg.prune_tol > 1e-3)
    throw UsageError("prune tolerance must be in [0, 1e-3]");
  if (cfg.zero_tol <= 0.0) throw UsageError("zero tolerance must be positive");
  if (cfg.stepwise_depth < 0) throw UsageError("stepwise depth must be nonnegative");
  if (cfg.time_limit_seconds <= 0.0) throw UsageError("time limit must be positive");
  for (int j : cfg.forced_zero)
    if (j < 1 || j > p)
      throw UsageError("forced-zero index " + std::to_string(j) + " out of range 1.." +
                       std::to_string(p));
}

}  // namespace

SolveReport solve(const GramSystem& g, const DependencyCollection& deps, const SolverConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const int p = g.p();
  validate(cfg, p);

  const BranchRule rule =
      cfg.rule == BranchRule::kAuto
          ? (deps.empty() ? BranchRule::kStrong : BranchRule::kMostFrequent)
          : cfg.rule;

  SolveReport report;
  report.rule_used = rule;

  SolutionPool pool(cfg.pool_size);
  std::optional<Incumbent> best;
  auto consider = [&](const IndexSet& subset, const ObjectiveValue& obj,
                      const std::vector<double>& beta) {
    pool.add(subset, obj.value);
    if (!best || best->obj.value - obj.value > kIncumbentTol) best = Incumbent{subset, obj, beta};
  };
  auto prune_threshold = [&]() {
    if (!best) return std::numeric_limits<double>::infinity();
    return best->obj.value - cfg.prune_tol * std::max(1.0, std::abs(best->obj.value));
  };
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::int64_t rank_probes = 0;
  // Experimental slow mode: probe every free column against the span of
  // {0} u Z1 instead of relying only on the precomputed collection.
  auto dynamic_fix = [&](NodeState s) {
    if (!cfg.dynamic_rank_fixing) return s;
    s.free_set(p).for_each([&](int q) {
      OlsFit probe = solve_subset(g, s.z1.with(q));
      ++rank_probes;
      for (int d : probe.dropped)
        if (d == q) s.z0.insert(q);
    });
    return s;
  };

  // Root: constant columns out, dependency-implied fixing, own relaxation,
  // both stepwise passes.
  NodeState root;
  for (int j : cfg.forced_zero) root.z0.insert(j);
  root = dynamic_fix(apply_dependency_fixing(root, deps));
  if (violates_cut(root.z1, deps)) throw InternalError("root violates a dependency cut");

  RelaxationBound root_rb = relax_bound(root, g);
  report.relaxations = 1;
  root.lower = root_rb.lower;
  root.relaxation = root_rb.fit;
  root.inherited = false;

  std::int64_t stepwise_evals = 0;
  {
    StepwiseResult sw = stepwise_bound(root, g);
    stepwise_evals += sw.evaluations;
    consider(sw.subset, sw.obj, sw.beta);
  }

  std::multiset<double> open_bounds;
  std::vector<QueueNode> heap;
  NodeOrder cmp{cfg.order};
  std::int64_t next_id = 0;
  auto push = [&](NodeState&& s) {
    open_bounds.insert(s.lower);
    heap.push_back(QueueNode{std::move(s), next_id++});
    std::push_heap(heap.begin(), heap.end(),
                   [&](const QueueNode& a, const QueueNode& b) { return cmp(b, a); });
  };
  auto pop = [&]() {
    std::pop_heap(heap.begin(), heap.end(),
                  [&](const QueueNode& a, const QueueNode& b) { return cmp(b, a); });
    QueueNode qn = std::move(heap.back());
    heap.pop_back();
    open_bounds.erase(open_bounds.find(qn.state.lower));
    return qn.state;
  };

  push(std::move(root));

  auto global_lower = [&]() {
    double open = open_bounds.empty() ? std::numeric_limits<double>::infinity() : *open_bounds.begin();
    return best ? std::min(best->obj.value, open) : open;
  };
  auto emit = [&](const NodeState& s, const char* action, int branch_index) {
    if (!cfg.trace) return;
    NodeTraceRecord rec;
    rec.z1 = s.z1;
    rec.z0 = s.z0;
    rec.depth = s.depth;
    rec.lower = s.lower;
    rec.inherited = s.inherited;
    rec.global_lower = global_lower();
    rec.action = action;
    rec.branch_index = branch_index;
    cfg.trace(rec);
  };


  report.status = SolveStatus::kOptimal;
  while (true) {
    if (heap.empty()) break;
    if (cfg.node_limit >= 0 && report.nodes >= cfg.node_limit) {
      report.status = SolveStatus::kNodeLimit;
      break;
    }
    if (elapsed() >= cfg.time_limit_seconds) {
      report.status = SolveStatus::kTimeLimit;
      break;
    }

    NodeState node = pop();
    ++report.nodes;

    if (!cfg.disable_pruning && node.lower >= prune_threshold()) {
      emit(node, "pruned", -1);
      continue;
    }
    if (!node.relaxation) {
      // Deferred child0 solve: the node was prunable when created.
      RelaxationBound rb = relax_bound(node, g);
      ++report.relaxations;
      node.lower = std::max(node.lower, rb.lower);
      node.relaxation = rb.fit;
      node.inherited = false;
      if (!cfg.disable_pruning && node.lower >= prune_threshold()) {
        emit(node, "pruned", -1);
        continue;
      }
    }

    IndexSet free = node.free_set(p);
    if (free.empty()) {
      Incumbent leaf = harvest_incumbent(node, *node.relaxation, g, cfg.zero_tol);
      consider(leaf.subset, leaf.obj, leaf.beta);
      emit(node, "leaf", -1);
      continue;
    }

    Incumbent h = harvest_incumbent(node, *node.relaxation, g, cfg.zero_tol);
    consider(h.subset, h.obj, h.beta);

    if (node.depth > 0 && node.depth <= cfg.stepwise_depth) {
      StepwiseResult sw = stepwise_bound(node, g);
      stepwise_evals += sw.evaluations;
      consider(sw.subset, sw.obj, sw.beta);
    }

    int j = -1;
    double strong_lower = 0.0;
    std::shared_ptr<const OlsFit> strong_fit;
    switch (rule) {
      case BranchRule::kStandard:
        j = select_default(node, *node.relaxation, p);
        break;
      case BranchRule::kMostFrequent:
        j = select_most_frequent(node, pool, *node.relaxation, p);
        break;
      case BranchRule::kStrong:
        if (cfg.strong_cap >= 0 && free.count() > cfg.strong_cap) {
          j = select_default(node, *node.relaxation, p);
        } else {
          StrongBranchChoice choice = select_strong(node, g, p);
          report.relaxations += choice.solves;
          j = choice.index;
          strong_lower = choice.child0_lower;
          strong_fit = std::move(choice.child0_fit);
        }
        break;
      case BranchRule::kAuto:
        throw InternalError("auto rule should have been resolved");
    }

    auto [child1, child0] = branch(node, j);
    child1 = dynamic_fix(apply_dependency_fixing(child1, deps));
    child0 = dynamic_fix(apply_dependency_fixing(child0, deps));

    if (strong_fit) {
      child0.lower = std::max(child0.lower, strong_lower);
      child0.relaxation = std::move(strong_fit);
      child0.inherited = false;
    } else if (cfg.disable_pruning || child0.lower < prune_threshold()) {
      RelaxationBound rb = relax_bound(child0, g);
      ++report.relaxations;
      child0.lower = std::max(child0.lower, rb.lower);
      child0.relaxation = rb.fit;
      child0.inherited = false;
    }
    // Otherwise child0 stays a placeholder carrying the parent bound; it is
    // already prunable and will be discarded (or solved, if the threshold
    // somehow moved) when popped.

    push(std::move(child0));
    push(std::move(child1));
    emit(node, "branched", j);
  }

  if (report.status == SolveStatus::kOptimal) {
    if (!best) throw InternalError("exhausted the tree without an incumbent");
    report.lower_bound = best->obj.value;
  } else {
    report.lower_bound = global_lower();
  }
  report.best = best;
  if (best) report.gap = gap_percent(best->obj.value, report.lower_bound);
  report.wall_seconds = elapsed();
  report.meta["stepwise_evaluations"] = std::to_string(stepwise_evals);
  report.meta["pool_entries"] = std::to_string(pool.entries().size());
  report.meta["dependency_sets"] = std::to_string(deps.size());
  if (cfg.dynamic_rank_fixing) report.meta["rank_probe_solves"] = std::to_string(rank_probes);
  return report;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kNodeLimit: return "node-limit";
    case SolveStatus::kTimeLimit: return "time-limit";
  }
  return "unknown";
}

const char* to_string(BranchRule rule) {
  switch (rule) {
    case BranchRule::kAuto: return "auto";
    case BranchRule::kStandard: return "std";
    case BranchRule::kMostFrequent: return "mfb";
    case BranchRule::kStrong: return "sb";
  }
  return "unknown";
}

BranchRule branch_rule_from_string(const std::string& name) {
  if (name == "auto") return BranchRule::kAuto;
  if (name == "std") return BranchRule::kStandard;
  if (name == "mfb") return BranchRule::kMostFrequent;
  if (name == "sb") return BranchRule::kStrong;
  throw UsageError("unknown branching rule '" + name + "' (expected auto, std, mfb, or sb)");
}

}  // namespace aicbnb
