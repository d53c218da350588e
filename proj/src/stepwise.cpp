#include "aicbnb/stepwise.hpp"

#include <cmath>

namespace aicbnb {

namespace {

constexpr double kImproveTol = 1e-9;  // absolute improvement required per move

StepwiseResult run_pass(const GramSystem& g, IndexSet start, IndexSet movable, bool forward) {
  StepwiseResult res;
  IndexSet s = start;

  OlsFit fit = solve_subset(g, s);
  ++res.evaluations;
  ObjectiveValue cur = objective(fit.rss, s.count(), g.n(), g.rss_floor());

  while (true) {
    IndexSet candidates = forward ? movable.minus(s) : movable & s;
    if (candidates.empty()) break;

    int best_j = -1;
    ObjectiveValue best{};
    candidates.for_each([&](int j) {
      IndexSet trial = forward ? s.with(j) : s.without(j);
      OlsFit tfit = solve_subset(g, trial);
      ++res.evaluations;
      ObjectiveValue obj = objective(tfit.rss, trial.count(), g.n(), g.rss_floor());
      if (best_j < 0 || obj.value < best.value) {  // ascending scan: ties keep the smaller index
        best_j = j;
        best = obj;
      }
    });

    if (best_j < 0 || cur.value - best.value <= kImproveTol) break;
    if (forward)
      s.insert(best_j);
    else
      s.erase(best_j);
    cur = best;
    res.moves.push_back({forward, best_j, best.value});
  }

  OlsFit final_fit = solve_subset(g, s);
  ++res.evaluations;
  res.subset = s;
  res.obj = cur;
  res.beta = final_fit.beta;
  return res;
}

}  // namespace

StepwiseResult stepwise_forward(const NodeState& node, const GramSystem& g) {
  IndexSet movable = node.free_set(g.p());
  return run_pass(g, node.z1, movable, /*forward=*/true);
}

StepwiseResult stepwise_backward(const NodeState& node, const GramSystem& g) {
  IndexSet movable = node.free_set(g.p());
  return run_pass(g, node.z1 | movable, movable, /*forward=*/false);
}

StepwiseResult stepwise_bound(const NodeState& node, const GramSystem& g) {
  StepwiseResult fwd = stepwise_forward(node, g);
  StepwiseResult bwd = stepwise_backward(node, g);
  bwd.evaluations += fwd.evaluations;
  fwd.evaluations = bwd.evaluations;
  return bwd.obj.value <= fwd.obj.value ? bwd : fwd;
}

StepwiseResult sw_forward(const GramSystem& g, const IndexSet& excluded) {
  NodeState root;
  root.z0 = excluded;
  return stepwise_forward(root, g);
}

StepwiseResult sw_backward(const GramSystem& g, const IndexSet& excluded) {
  NodeState root;
  root.z0 = excluded;
  return stepwise_backward(root, g);
}

}  // namespace aicbnb
