#include "aicbnb/ols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aicbnb/errors.hpp"

namespace aicbnb {

namespace {

constexpr double kPivotRelTol = 1e-10;  // relative to the largest starting diagonal
constexpr double kPsdGuard = 1e-8;      // relative to the submatrix trace

}  // namespace

OlsFit solve_subset(const GramSystem& g, std::span<const int> subset) {
  const int p = g.p();
  const int m = static_cast<int>(subset.size()) + 1;  // intercept plus subset

  // idx maps factorization position -> Gram column (position 0 = intercept).
  std::vector<int> idx(static_cast<std::size_t>(m));
  idx[0] = 0;
  for (int t = 1; t < m; ++t) {
    int j = subset[static_cast<std::size_t>(t - 1)];
    if (j < 1 || j > p) throw InternalError("subset index out of range: " + std::to_string(j));
    if (t > 1 && subset[static_cast<std::size_t>(t - 2)] >= j)
      throw InternalError("subset indices must be strictly ascending");
    idx[static_cast<std::size_t>(t)] = j;
  }

  std::vector<double> a(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<double> rhs(static_cast<std::size_t>(m));
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
  };
  double trace = 0.0;
  double max_diag = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) at(i, j) = g.g(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    rhs[static_cast<std::size_t>(i)] = g.b(idx[static_cast<std::size_t>(i)]);
    trace += at(i, i);
    max_diag = std::max(max_diag, at(i, i));
  }
  const double pivot_tol = kPivotRelTol * max_diag;
  const double psd_floor = -kPsdGuard * std::max(trace, 1.0);

  // Cholesky with diagonal pivoting in lower-triangular storage; perm[t] is
  // the original position held at factorization position t.
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) perm[static_cast<std::size_t>(t)] = t;
  int rank = m;
  for (int t = 0; t < m; ++t) {
    int q = t;
    for (int i = t + 1; i < m; ++i)
      if (at(i, i) > at(q, q)) q = i;
    double pivot = at(q, q);
    if (pivot < psd_floor) throw InternalError("Gram submatrix is not positive semidefinite");
    if (pivot <= pivot_tol) {
      rank = t;
      break;
    }
    if (q != t) {
      std::swap(perm[static_cast<std::size_t>(t)], perm[static_cast<std::size_t>(q)]);
      for (int c = 0; c < t; ++c) std::swap(at(t, c), at(q, c));
      std::swap(at(t, t), at(q, q));
      for (int i = t + 1; i < q; ++i) std::swap(at(i, t), at(q, i));
      for (int i = q + 1; i < m; ++i) std::swap(at(i, t), at(i, q));
    }
    double ltt = std::sqrt(pivot);
    at(t, t) = ltt;
    for (int i = t + 1; i < m; ++i) at(i, t) /= ltt;
    for (int j = t + 1; j < m; ++j) {
      double ljt = at(j, t);
      for (int i = j; i < m; ++i) at(i, j) -= at(i, t) * ljt;
    }
  }

  // Solve L L^T v = rhs restricted to the kept positions.
  std::vector<double> v(static_cast<std::size_t>(rank));
  for (int t = 0; t < rank; ++t) {
    double s = rhs[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
    for (int j = 0; j < t; ++j) s -= at(t, j) * v[static_cast<std::size_t>(j)];
    v[static_cast<std::size_t>(t)] = s / at(t, t);
  }
  for (int t = rank - 1; t >= 0; --t) {
    double s = v[static_cast<std::size_t>(t)];
    for (int i = t + 1; i < rank; ++i) s -= at(i, t) * v[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(t)] = s / at(t, t);
  }

  OlsFit fit;
  fit.subset.assign(subset.begin(), subset.end());
  fit.beta.assign(static_cast<std::size_t>(p) + 1, 0.0);
  double fitted = 0.0;  // beta^T rhs over kept columns
  for (int t = 0; t < rank; ++t) {
    int pos = perm[static_cast<std::size_t>(t)];
    fit.beta[static_cast<std::size_t>(idx[static_cast<std::size_t>(pos)])] = v[static_cast<std::size_t>(t)];
    fitted += v[static_cast<std::size_t>(t)] * rhs[static_cast<std::size_t>(pos)];
  }
  for (int t = rank; t < m; ++t)
    fit.dropped.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])]);
  std::sort(fit.dropped.begin(), fit.dropped.end());

  fit.rss = std::max(g.yty() - fitted, 0.0);
  fit.sigma2 = fit.rss / static_cast<double>(g.n());
  return fit;
}

OlsFit solve_subset(const GramSystem& g, const IndexSet& subset) {
  std::vector<int> idx = subset.to_vector();
  return solve_subset(g, std::span<const int>(idx));
}

ObjectiveValue objective(double rss, int k, int n, double rss_floor) {
  if (k < 0 || n < 1) throw InternalError("objective needs k >= 0 and n >= 1");
  ObjectiveValue out;
  out.k = k;
  out.clamped = rss < rss_floor;
  out.value = static_cast<double>(n) * std::log(std::max(rss, rss_floor)) + 2.0 * static_cast<double>(k);
  return out;
}

double full_aic(double objective_value, int n) {
  return objective_value + 4.0 +
         static_cast<double>(n) * (std::log(2.0 * std::numbers::pi / static_cast<double>(n)) + 1.0);
}

double full_aic(const ObjectiveValue& obj, int n) { return full_aic(obj.value, n); }

double gap_percent(double upper, double lower) {
  return (upper - lower) / std::max(1.0, std::abs(upper)) * 100.0;
}

}  // namespace aicbnb
