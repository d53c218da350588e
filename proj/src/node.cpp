#include "aicbnb/node.hpp"

#include <algorithm>
#include <cmath>

#include "aicbnb/errors.hpp"

namespace aicbnb {

RelaxationBound relax_bound(const NodeState& node, const GramSystem& g) {
  if (node.z1.intersects(node.z0)) throw InternalError("node partition overlaps");
  IndexSet active = IndexSet::full(g.p()).minus(node.z0);  // z1 plus free set
  auto fit = std::make_shared<OlsFit>(solve_subset(g, active));
  ObjectiveValue obj = objective(fit->rss, node.z1.count(), g.n(), g.rss_floor());

  RelaxationBound out;
  out.fit = std::move(fit);
  out.lower = obj.value;
  out.clamped = obj.clamped;
  return out;
}

Incumbent harvest_incumbent(const NodeState& node, const OlsFit& fit, const GramSystem& g,
                            double zero_tol) {
  double scale = 1.0;
  for (double b : fit.beta) scale = std::max(scale, std::abs(b));
  const double threshold = zero_tol * scale;

  IndexSet subset = node.z1;
  node.free_set(g.p()).for_each([&](int j) {
    if (std::abs(fit.coefficient(j)) > threshold) subset.insert(j);
  });

  // The harvested subset spans the same fitted values the relaxation found
  // (up to coefficients below the zero threshold), so its rss is the
  // relaxation rss; no re-solve needed.
  Incumbent inc;
  inc.subset = subset;
  inc.obj = objective(fit.rss, subset.count(), g.n(), g.rss_floor());
  inc.beta.assign(fit.beta.size(), 0.0);
  inc.beta[0] = fit.beta[0];
  subset.for_each([&](int j) { inc.beta[static_cast<std::size_t>(j)] = fit.coefficient(j); });
  return inc;
}

std::pair<NodeState, NodeState> branch(const NodeState& node, int j) {
  if (node.z1.contains(j) || node.z0.contains(j))
    throw InternalError("branch index " + std::to_string(j) + " is not free");

  NodeState child1;
  child1.z1 = node.z1.with(j);
  child1.z0 = node.z0;
  child1.depth = node.depth + 1;
  child1.lower = node.lower + 2.0;
  child1.inherited = true;
  child1.relaxation = node.relaxation;  // identical free-column set

  NodeState child0;
  child0.z1 = node.z1;
  child0.z0 = node.z0.with(j);
  child0.depth = node.depth + 1;
  child0.lower = node.lower;  // parent bound still valid until its own solve
  child0.inherited = true;
  child0.relaxation = nullptr;

  return {std::move(child1), std::move(child0)};
}

NodeState apply_dependency_fixing(const NodeState& node, const DependencyCollection& deps) {
  NodeState out = node;
  if (deps.empty()) return out;

  bool changed = true;
  while (changed) {
    changed = false;
    const IndexSet fixed = out.z1 | out.z0;
    for (const DependencySet& dep : deps) {
      IndexSet candidates = dep.full_set.minus(fixed);
      if (candidates.empty()) continue;
      if (!dep.full_set.minus(candidates).is_subset_of(out.z1)) continue;
      // With all non-free members already fixed in, fixing any single free
      // member out is enough only when it is the sole free one; otherwise the
      // trigger D \ {q} <= Z1 fails for each q. Check per candidate.
      candidates.for_each([&](int q) {
        if (dep.full_set.without(q).is_subset_of(out.z1)) {
          out.z0.insert(q);
          changed = true;
        }
      });
    }
  }
  if (out.z1.intersects(out.z0)) throw InternalError("dependency fixing produced an overlap");
  return out;
}

bool violates_cut(const IndexSet& z1, const DependencyCollection& deps) {
  for (const DependencySet& dep : deps)
    if (dep.full_set.is_subset_of(z1)) return true;
  return false;
}

}  // namespace aicbnb
