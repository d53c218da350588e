#pragma once

#include <vector>

#include "aicbnb/gram.hpp"
#include "aicbnb/node.hpp"

namespace aicbnb {

struct StepwiseMove {
  bool added = true;  // false: removed
  int index = 0;
  double objective = 0.0;  // objective after the move
};

struct StepwiseResult {
  IndexSet subset;
  ObjectiveValue obj;
  std::vector<double> beta;
  std::vector<StepwiseMove> moves;
  long evaluations = 0;  // subset solves performed
};

/// Forward selection from S = z1: repeatedly adds the free predictor that
/// minimizes the objective, as long as each move improves it by more than
/// 1e-9. The result always contains z1 and avoids z0, so it is feasible for
/// the node.
StepwiseResult stepwise_forward(const NodeState& node, const GramSystem& g);

/// Backward elimination from S = z1 + free set, removing free members only.
StepwiseResult stepwise_backward(const NodeState& node, const GramSystem& g);

/// Runs both passes and returns the one with the smaller objective
/// (backward on ties).
StepwiseResult stepwise_bound(const NodeState& node, const GramSystem& g);

/// Standalone root-level heuristics over all predictors except `excluded`.
StepwiseResult sw_forward(const GramSystem& g, const IndexSet& excluded = {});
StepwiseResult sw_backward(const GramSystem& g, const IndexSet& excluded = {});

}  // namespace aicbnb
