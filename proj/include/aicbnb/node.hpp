#pragma once

#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "aicbnb/dependencies.hpp"
#include "aicbnb/gram.hpp"
#include "aicbnb/index_set.hpp"
#include "aicbnb/ols.hpp"

namespace aicbnb {

/// A search-tree node identified by the predictors fixed in (z1), fixed out
/// (z0), and free (everything else). `lower` bounds the objective of every
/// feasible completion; `inherited` marks bounds derived from the parent
/// without a relaxation solve of this node's own.
struct NodeState {
  IndexSet z1;
  IndexSet z0;
  int depth = 0;
  double lower = -std::numeric_limits<double>::infinity();
  bool inherited = false;
  /// Relaxation fit this node's bound came from. Children created by fixing
  /// a variable to one share the parent's fit, since the free column set of
  /// their relaxation is identical.
  std::shared_ptr<const OlsFit> relaxation;

  IndexSet free_set(int p) const { return IndexSet::full(p).minus(z1 | z0); }
};

/// A feasible subset with its objective, as found by relaxation harvesting,
/// stepwise search, or a cardinality solve.
struct Incumbent {
  IndexSet subset;
  ObjectiveValue obj;
  std::vector<double> beta;  // dense, length p+1
};

struct RelaxationBound {
  double lower = 0.0;
  std::shared_ptr<const OlsFit> fit;
  bool clamped = false;
};

/// Solves the node relaxation (free coefficients on z1 and the free set,
/// zeros on z0) and returns n*log(xi*) + 2*|z1| with the fit.
RelaxationBound relax_bound(const NodeState& node, const GramSystem& g);

/// Rounds the relaxation fit to a feasible subset: z1 plus the free
/// predictors with coefficients above zero_tol * max(1, |beta|_inf). The
/// objective is recomputed from the relaxation rss, not re-solved.
Incumbent harvest_incumbent(const NodeState& node, const OlsFit& fit, const GramSystem& g,
                            double zero_tol);

/// Splits on free index j. The z_j=1 child inherits the parent bound plus
/// two (its relaxation is identical); the z_j=0 child needs a fresh solve.
std::pair<NodeState, NodeState> branch(const NodeState& node, int j);

/// Moves every free index q to z0 whenever a stored dependent set D contains
/// q and D minus q is already fixed in; iterates to a fixed point.
NodeState apply_dependency_fixing(const NodeState& node, const DependencyCollection& deps);

/// True when some stored dependent set lies entirely inside z1. Such nodes
/// are dominated and must never be created while fixing is applied eagerly.
bool violates_cut(const IndexSet& z1, const DependencyCollection& deps);

}  // namespace aicbnb
