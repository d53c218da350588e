#include "support/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace aicbnb::testing {

namespace {

Eigen::MatrixXd design(const Dataset& d, const std::vector<int>& subset, bool with_intercept) {
  const int n = d.n();
  const int cols = static_cast<int>(subset.size()) + (with_intercept ? 1 : 0);
  Eigen::MatrixXd x(n, cols);
  int c = 0;
  if (with_intercept) x.col(c++).setOnes();
  for (int j : subset) {
    const std::vector<double>& col = d.column(j);
    for (int i = 0; i < n; ++i) x(i, c) = col[static_cast<std::size_t>(i)];
    ++c;
  }
  return x;
}

Eigen::VectorXd response(const Dataset& d) {
  Eigen::VectorXd y(d.n());
  for (int i = 0; i < d.n(); ++i) y(i) = d.response()[static_cast<std::size_t>(i)];
  return y;
}

double rss_floor(const Dataset& d) {
  double yty = response(d).squaredNorm();
  return std::max(1e-12 * yty, 1e-300);
}

}  // namespace

double oracle_rss(const Dataset& d, const std::vector<int>& subset) {
  Eigen::MatrixXd x = design(d, subset, /*with_intercept=*/true);
  Eigen::VectorXd y = response(d);
  // Rank-revealing solve with an explicit threshold: on rank-deficient
  // designs ColPivHouseholderQR::solve() back-substitutes through
  // epsilon-scale pivots, and the exploded coefficients wreck the
  // recomputed residual. The complete orthogonal decomposition returns the
  // bounded minimum-norm least-squares solution instead.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(1e-10);
  cod.compute(x);
  Eigen::VectorXd beta = cod.solve(y);
  return (y - x * beta).squaredNorm();
}

double oracle_rss(const Dataset& d, const IndexSet& subset) {
  return oracle_rss(d, subset.to_vector());
}

int oracle_rank(const Dataset& d, const IndexSet& subset, bool with_intercept) {
  Eigen::MatrixXd x = design(d, subset.to_vector(), with_intercept);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

double oracle_objective(const Dataset& d, double rss, int k) {
  return static_cast<double>(d.n()) * std::log(std::max(rss, rss_floor(d))) + 2.0 * k;
}

OracleBest oracle_best_subset(const Dataset& d) {
  const int p = d.p();
  OracleBest best;
  best.objective = std::numeric_limits<double>::infinity();
  bool have = false;

  std::vector<int> idx;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    idx.clear();
    for (int j = 1; j <= p; ++j)
      if ((mask >> (j - 1)) & 1u) idx.push_back(j);
    double rss = oracle_rss(d, idx);
    double obj = oracle_objective(d, rss, static_cast<int>(idx.size()));
    IndexSet s = IndexSet::from_indices(idx);
    int k = static_cast<int>(idx.size());
    bool better =
        !have || obj < best.objective ||
        (obj == best.objective && (k < best.k || (k == best.k && s.lex_less(best.subset))));
    if (better) {
      best.subset = s;
      best.objective = obj;
      best.rss = rss;
      best.k = k;
      have = true;
    }
  }
  return best;
}

double oracle_min_completion(const Dataset& d, const IndexSet& z1, const IndexSet& z0) {
  IndexSet free = IndexSet::full(d.p()).minus(z1 | z0);
  std::vector<int> fv = free.to_vector();
  const int m = static_cast<int>(fv.size());

  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    IndexSet s = z1;
    for (int t = 0; t < m; ++t)
      if ((mask >> t) & 1u) s.insert(fv[static_cast<std::size_t>(t)]);
    double obj = oracle_objective(d, oracle_rss(d, s), s.count());
    best = std::min(best, obj);
  }
  return best;
}

double oracle_min_rss_exact_k(const Dataset& d, int k) {
  const int p = d.p();
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> idx;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    if (std::popcount(mask) != k) continue;
    idx.clear();
    for (int j = 1; j <= p; ++j)
      if ((mask >> (j - 1)) & 1u) idx.push_back(j);
    best = std::min(best, oracle_rss(d, idx));
  }
  return best;
}

}  // namespace aicbnb::testing
