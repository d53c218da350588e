#pragma once

#include <memory>

#include "aicbnb/gram.hpp"
#include "aicbnb/node.hpp"
#include "aicbnb/pool.hpp"

namespace aicbnb {

enum class BranchRule {
  kAuto,          // most-frequent when the data has dependencies, else strong
  kStandard,      // largest relaxation coefficient
  kMostFrequent,  // highest membership count among pooled solutions
  kStrong,        // largest z=0 child bound
};

/// Free index with the largest |beta_j| in the node relaxation; ties go to
/// the smallest index.
int select_default(const NodeState& node, const OlsFit& fit, int p);

/// Free index appearing most often among the pooled best subsets. Falls back
/// to the default rule when the pool is empty.
int select_most_frequent(const NodeState& node, const SolutionPool& pool, const OlsFit& fit,
                         int p);

struct StrongBranchChoice {
  int index = -1;
  /// Bound and fit of the z=0 relaxation for the chosen index; the engine
  /// caches them on the child so its own solve is skipped.
  double child0_lower = 0.0;
  std::shared_ptr<const OlsFit> child0_fit;
  long solves = 0;
};

/// Solves the z_k=0 relaxation for every free k and picks the k whose bound
/// is largest. The z_k=1 side is never solved: its relaxation has the same
/// free columns as the node itself, so its value is the node bound plus two.
StrongBranchChoice select_strong(const NodeState& node, const GramSystem& g, int p);

}  // namespace aicbnb
