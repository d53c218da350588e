#pragma once

#include <cstdint>
#include <vector>

#include "aicbnb/gram.hpp"
#include "aicbnb/index_set.hpp"
#include "aicbnb/ols.hpp"

namespace aicbnb {

struct EnumerationRow {
  std::uint64_t mask = 0;  // bit j-1 set when predictor j is in the subset
  int k = 0;
  double rss = 0.0;
  double objective = 0.0;
  double aic = 0.0;
};

struct EnumerationResult {
  IndexSet best_subset;
  ObjectiveValue best;
  std::vector<EnumerationRow> table;  // populated only when requested
};

/// Brute-force ground truth: evaluates the objective of every predictor
/// subset. Ties go to the smaller subset size, then to the lexicographically
/// smallest subset. Throws UsageError when p exceeds `cap`.
EnumerationResult enumerate_all(const GramSystem& g, int cap = 20, bool with_table = false);

}  // namespace aicbnb
