#include "aicbnb/cardinality.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "aicbnb/errors.hpp"
#include "aicbnb/ols.hpp"

namespace aicbnb {

namespace {

constexpr double kImproveTol = 1e-9;
constexpr double kHarvestZeroTol = 1e-9;

struct CNode {
  IndexSet z1;
  IndexSet z0;
  std::shared_ptr<const OlsFit> fit;  // relaxation of this node if inherited from the parent
};

}  // namespace

CardinalityResult best_subset_k(const GramSystem& g, const DependencyCollection& deps, int k,
                                CardinalityMode mode,
                                const std::optional<CardinalityResult>& warm_start) {
  const int p = g.p();
  if (k < 0 || k > p)
    throw UsageError("cardinality " + std::to_string(k) + " out of range 0.." + std::to_string(p));

  CardinalityResult res;
  res.k = k;

  double best_eta = std::numeric_limits<double>::infinity();
  IndexSet best_subset;
  bool feasible = false;
  if (mode == CardinalityMode::kAtMost && warm_start && warm_start->feasible) {
    best_eta = warm_start->eta;
    best_subset = warm_start->subset;
    feasible = true;
  }

  auto candidate = [&](const IndexSet& s, double rss) {
    if (!feasible || rss < best_eta) {
      best_eta = rss;
      best_subset = s;
      feasible = true;
    }
  };

  std::vector<CNode> stack;
  stack.push_back(CNode{});

  while (!stack.empty()) {
    CNode top = std::move(stack.back());
    stack.pop_back();
    ++res.nodes;

    NodeState proxy;
    proxy.z1 = top.z1;
    proxy.z0 = top.z0;
    proxy = apply_dependency_fixing(proxy, deps);
    if (violates_cut(proxy.z1, deps)) continue;  // unreachable with eager fixing; safety

    const IndexSet free = proxy.free_set(p);
    const int k1 = proxy.z1.count();
    if (k1 > k) continue;
    if (mode == CardinalityMode::kExact && k1 + free.count() < k) continue;

    if (k1 == k || free.empty()) {
      // Every admissible completion is exactly Z1 (at-most allows smaller
      // sets, but Z1 is forced in); evaluate it directly.
      OlsFit fit = solve_subset(g, proxy.z1);
      candidate(proxy.z1, fit.rss);
      continue;
    }

    if (!top.fit) {
      IndexSet active = proxy.z1 | free;
      top.fit = std::make_shared<const OlsFit>(solve_subset(g, active));
    }
    const OlsFit& fit = *top.fit;
    if (feasible && fit.rss >= best_eta) continue;  // rss monotonicity bound

    // Harvest the rounded relaxation when its size is admissible; its rss
    // equals the relaxation rss because dropped coefficients are zero.
    double scale = 1.0;
    for (double b : fit.beta) scale = std::max(scale, std::abs(b));
    IndexSet rounded = proxy.z1;
    free.for_each([&](int j) {
      if (std::abs(fit.coefficient(j)) > kHarvestZeroTol * scale) rounded.insert(j);
    });
    const int rk = rounded.count();
    if ((mode == CardinalityMode::kExact && rk == k) ||
        (mode == CardinalityMode::kAtMost && rk <= k))
      candidate(rounded, fit.rss);

    // Branch on the largest free relaxation coefficient (ties: smallest
    // index); the z_j=1 child shares this relaxation.
    int j = -1;
    double best_mag = -1.0;
    free.for_each([&](int q) {
      double mag = std::abs(fit.coefficient(q));
      if (mag > best_mag) {
        best_mag = mag;
        j = q;
      }
    });

    CNode child0{proxy.z1, proxy.z0.with(j), nullptr};
    CNode child1{proxy.z1.with(j), proxy.z0, top.fit};
    stack.push_back(std::move(child0));
    stack.push_back(std::move(child1));  // LIFO: explore the z_j=1 side first
  }

  if (feasible) {
    res.eta = best_eta;
    res.subset = best_subset;
    res.objective = objective(best_eta, k, g.n(), g.rss_floor()).value;
    res.feasible = true;
  }
  return res;
}

int k_cap(double theta_bar, double theta_hat, int p) {
  if (theta_bar < theta_hat - 1e-9)
    throw InternalError("cardinality cap inverted: upper bound below the full-model bound");
  double width = std::max(0.0, (theta_bar - theta_hat) / 2.0);
  double f = std::floor(width);
  if (f >= static_cast<double>(p)) return p;
  return static_cast<int>(f);
}

namespace {

// Shared sweep driver. stop_cap=false reproduces the naive sweep.
SweepReport run_sweep(const GramSystem& g, const DependencyCollection& deps, CardinalityMode mode,
                      double initial_upper, bool stop_cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const int p = g.p();
  const int n = g.n();

  SweepReport rep;
  double theta_bar = initial_upper;

  if (stop_cap) {
    OlsFit full = solve_subset(g, IndexSet::full(p));
    rep.theta_hat = objective(full.rss, 0, n, g.rss_floor()).value;
  }

  IndexSet best_subset;
  double best_value = std::numeric_limits<double>::infinity();
  bool have_best = false;

  std::optional<CardinalityResult> prev;
  for (int k = 0; k <= p; ++k) {
    if (stop_cap && std::isfinite(theta_bar) && k > k_cap(theta_bar, rep.theta_hat, p)) {
      rep.stop_k = k;
      break;
    }
    std::optional<CardinalityResult> warm;
    if (mode == CardinalityMode::kAtMost) warm = prev;
    CardinalityResult r = best_subset_k(g, deps, k, mode, warm);
    ++rep.solves;
    if (r.feasible) {
      theta_bar = std::min(theta_bar, r.objective);  // literal n log(eta) + 2k update
      ObjectiveValue true_obj = objective(r.eta, r.subset.count(), n, g.rss_floor());
      if (!have_best || best_value - true_obj.value > kImproveTol) {
        best_value = true_obj.value;
        best_subset = r.subset;
        have_best = true;
      }
      prev = r;
    }
    rep.per_k.push_back(std::move(r));
  }

  if (have_best) {
    OlsFit fit = solve_subset(g, best_subset);
    Incumbent inc;
    inc.subset = best_subset;
    inc.obj = objective(fit.rss, best_subset.count(), n, g.rss_floor());
    inc.beta = fit.beta;
    rep.best = std::move(inc);
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

SweepReport sweep_naive(const GramSystem& g, const DependencyCollection& deps) {
  return run_sweep(g, deps, CardinalityMode::kExact,
                   std::numeric_limits<double>::infinity(), /*stop_cap=*/false);
}

SweepReport sweep_fast(const GramSystem& g, const DependencyCollection& deps, CardinalityMode mode,
                       double initial_upper) {
  return run_sweep(g, deps, mode, initial_upper, /*stop_cap=*/true);
}

}  // namespace aicbnb
