#include "aicbnb/branching.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "aicbnb/errors.hpp"

namespace aicbnb {

int select_default(const NodeState& node, const OlsFit& fit, int p) {
  IndexSet free = node.free_set(p);
  if (free.empty()) throw InternalError("select_default on a node without free variables");
  int best = -1;
  double best_mag = -1.0;
  free.for_each([&](int j) {
    double mag = std::abs(fit.coefficient(j));
    if (mag > best_mag) {
      best_mag = mag;
      best = j;  // first visit wins ties: for_each scans ascending
    }
  });
  return best;
}

int select_most_frequent(const NodeState& node, const SolutionPool& pool, const OlsFit& fit,
                         int p) {
  if (pool.empty()) return select_default(node, fit, p);
  IndexSet free = node.free_set(p);
  if (free.empty()) throw InternalError("select_most_frequent on a node without free variables");

  int best = -1;
  int best_score = -1;
  free.for_each([&](int j) {
    int score = 0;
    for (const SolutionPool::Entry& e : pool.entries())
      if (e.subset.contains(j)) ++score;
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  });
  return best;
}

StrongBranchChoice select_strong(const NodeState& node, const GramSystem& g, int p) {
  IndexSet free = node.free_set(p);
  if (free.empty()) throw InternalError("select_strong on a node without free variables");

  StrongBranchChoice choice;
  double best_bound = -std::numeric_limits<double>::infinity();
  free.for_each([&](int k) {
    NodeState child0;
    child0.z1 = node.z1;
    child0.z0 = node.z0.with(k);
    RelaxationBound rb = relax_bound(child0, g);
    ++choice.solves;
    if (rb.lower > best_bound) {
      best_bound = rb.lower;
      choice.index = k;
      choice.child0_lower = rb.lower;
      choice.child0_fit = rb.fit;
    }
  });
  return choice;
}

}  // namespace aicbnb
