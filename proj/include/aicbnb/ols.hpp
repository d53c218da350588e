#pragma once

#include <span>
#include <vector>

#include "aicbnb/gram.hpp"
#include "aicbnb/index_set.hpp"

namespace aicbnb {

/// Least-squares fit of the response on the intercept plus a predictor
/// subset, computed from the Gram system.
struct OlsFit {
  std::vector<int> subset;  // requested predictor indices, ascending
  /// Dense coefficient vector of length p+1; beta[0] is the intercept and
  /// beta[j] is zero for every j outside the subset or dropped.
  std::vector<double> beta;
  double rss = 0.0;
  double sigma2 = 0.0;
  /// Columns removed during factorization because their pivot fell below the
  /// rank tolerance (0 denotes the intercept).
  std::vector<int> dropped;

  double coefficient(int j) const { return beta[static_cast<std::size_t>(j)]; }
};

/// Minimizes sum_i (y_i - b0 - sum_{j in S} b_j x_ij)^2 by a diagonally
/// pivoted Cholesky factorization of the {0}+S submatrix of the Gram system.
/// Rank-deficient columns are dropped rather than failing, so every subset is
/// solvable.
OlsFit solve_subset(const GramSystem& g, std::span<const int> subset);
OlsFit solve_subset(const GramSystem& g, const IndexSet& subset);

struct ObjectiveValue {
  double value = 0.0;
  int k = 0;
  bool clamped = false;  // rss fell below the floor
};

inline constexpr double kMinRssFloor = 1e-300;

/// n*log(max(rss, floor)) + 2k.
ObjectiveValue objective(double rss, int k, int n, double rss_floor = kMinRssFloor);

/// Adds back the constant the selection objective omits: value + 4 +
/// n*(log(2*pi/n)+1) equals the model-selection criterion statisticians
/// report (n*log(rss) + 2(k+2) + n*(log(2*pi/n)+1)).
double full_aic(const ObjectiveValue& obj, int n);
double full_aic(double objective_value, int n);

/// (upper - lower) / max(1, |upper|) * 100.
double gap_percent(double upper, double lower);

}  // namespace aicbnb
