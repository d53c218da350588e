#pragma once

#include <vector>

#include "aicbnb/dataset.hpp"
#include "aicbnb/index_set.hpp"

// Independent ground truth for the solver: everything here works from the raw
// data rows through Eigen's dense rank-revealing QR, never through the
// GramSystem/Cholesky path under test.
namespace aicbnb::testing {

/// Residual sum of squares of the least-squares fit of the response on the
/// intercept plus the given predictors.
double oracle_rss(const Dataset& d, const std::vector<int>& subset);
double oracle_rss(const Dataset& d, const IndexSet& subset);

/// Rank of the column set (optionally augmented with the intercept).
int oracle_rank(const Dataset& d, const IndexSet& subset, bool with_intercept);

/// n*log(max(rss, floor)) + 2k with the floor recomputed from raw data.
double oracle_objective(const Dataset& d, double rss, int k);

struct OracleBest {
  IndexSet subset;
  double objective = 0.0;
  double rss = 0.0;
  int k = 0;
};

/// Brute force over all 2^p subsets; ties to smaller k, then lexicographic.
OracleBest oracle_best_subset(const Dataset& d);

/// Minimum objective over all completions z1 <= S <= z1 + free of a node.
double oracle_min_completion(const Dataset& d, const IndexSet& z1, const IndexSet& z0);

/// Minimum rss over all subsets of exactly k predictors.
double oracle_min_rss_exact_k(const Dataset& d, int k);

}  // namespace aicbnb::testing
