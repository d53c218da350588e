#include "aicbnb/dependencies.hpp"

#include <cmath>
#include <vector>

#include "aicbnb/errors.hpp"

namespace aicbnb {

namespace {

constexpr double kResidualRelTol = 1e-8;  // dependent when ||r|| <= tol * ||x||
constexpr double kAlphaZeroTol = 1e-10;   // alpha entries below this are zero

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

DependencyCollection find_dependencies(const Dataset& d) {
  const int n = d.n();
  const int p = d.p();

  // Orthonormal basis q_0..q_{m-1} built from the accepted columns, plus the
  // upper-triangular R expressing each accepted column in the q's:
  // x^{basis[t]} = sum_{s<=t} R[s][t] q_s.
  std::vector<std::vector<double>> q;
  std::vector<std::vector<double>> r_cols;
  std::vector<int> basis;

  DependencyCollection out;

  for (int j = 0; j <= p; ++j) {
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    if (j > 0) x = d.column(j);
    const double xnorm = norm(x);

    // Modified Gram-Schmidt with one reorthogonalization pass.
    std::vector<double> coef(basis.size(), 0.0);
    std::vector<double> resid = x;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t t = 0; t < q.size(); ++t) {
        double c = dot(q[t], resid);
        coef[t] += c;
        for (int i = 0; i < n; ++i)
          resid[static_cast<std::size_t>(i)] -= c * q[t][static_cast<std::size_t>(i)];
      }
    }
    const double rnorm = norm(resid);

    if (rnorm > kResidualRelTol * xnorm && xnorm > 0.0) {
      for (int i = 0; i < n; ++i) resid[static_cast<std::size_t>(i)] /= rnorm;
      q.push_back(std::move(resid));
      coef.push_back(rnorm);
      r_cols.push_back(std::move(coef));
      basis.push_back(j);
      continue;
    }

    // Dependent: solve R alpha = coef so that x^j ~= sum_k alpha_k x^{basis[k]}.
    const std::size_t m = basis.size();
    std::vector<double> alpha(m, 0.0);
    for (std::size_t ti = m; ti-- > 0;) {
      double s = coef[ti];
      for (std::size_t si = ti + 1; si < m; ++si) s -= r_cols[si][ti] * alpha[si];
      alpha[ti] = s / r_cols[ti][ti];
    }

    DependencySet set;
    set.dependent = j;
    for (std::size_t t = 0; t < m; ++t) {
      if (std::abs(alpha[t]) <= kAlphaZeroTol) continue;
      if (basis[t] == 0) {
        set.uses_intercept = true;
        set.intercept_coefficient = alpha[t];
      } else {
        set.members.push_back(basis[t]);
        set.coefficients.push_back(alpha[t]);
      }
    }
    set.full_set = IndexSet::from_indices(set.members);
    if (j > 0) {
      set.full_set.insert(j);
      out.add(std::move(set));
    } else {
      throw InternalError("intercept column cannot be dependent");
    }
  }

  return out;
}

}  // namespace aicbnb
