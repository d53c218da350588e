#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "aicbnb/dependencies.hpp"
#include "aicbnb/gram.hpp"
#include "aicbnb/node.hpp"

namespace aicbnb {

enum class CardinalityMode { kExact, kAtMost };

struct CardinalityResult {
  int k = 0;
  /// Optimal rss over subsets of the stated cardinality; +inf when the
  /// dependency cuts make exact-k infeasible.
  double eta = std::numeric_limits<double>::infinity();
  IndexSet subset;
  double objective = std::numeric_limits<double>::infinity();  // n*log(eta) + 2k
  bool feasible = false;
  std::int64_t nodes = 0;
};

/// Minimum-rss subset of size k (or at most k) by branch-and-bound with the
/// relaxation rss as bound and the dependency cuts as pruning rules. The
/// at-most variant accepts a warm-start incumbent.
CardinalityResult best_subset_k(const GramSystem& g, const DependencyCollection& deps, int k,
                                CardinalityMode mode,
                                const std::optional<CardinalityResult>& warm_start = std::nullopt);

/// Cardinality cap floor((theta_bar - theta_hat) / 2) clamped to [0, p],
/// where theta_hat is the full-model bound and theta_bar any feasible
/// objective. Throws InternalError when theta_bar < theta_hat beyond
/// tolerance.
int k_cap(double theta_bar, double theta_hat, int p);

struct SweepReport {
  std::optional<Incumbent> best;
  std::vector<CardinalityResult> per_k;
  int solves = 0;        // per-cardinality solves performed
  double theta_hat = 0;  // full-model bound (fast sweeps)
  int stop_k = -1;       // first cardinality skipped by the early stop, -1 if none
  double wall_seconds = 0.0;
};

/// Solves every cardinality 0..p and returns the objective minimizer.
SweepReport sweep_naive(const GramSystem& g, const DependencyCollection& deps);

/// Ascending sweep with the floor((theta_bar - theta_hat)/2) early stop.
/// `mode` picks exact-k or at-most-k subproblems; `initial_upper` optionally
/// seeds theta_bar (e.g. from a stepwise run).
SweepReport sweep_fast(const GramSystem& g, const DependencyCollection& deps, CardinalityMode mode,
                       double initial_upper = std::numeric_limits<double>::infinity());

}  // namespace aicbnb
