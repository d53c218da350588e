#include "aicbnb/gram.hpp"

#include <algorithm>
#include <cmath>

#include "aicbnb/errors.hpp"
#include "aicbnb/index_set.hpp"

namespace aicbnb {

GramSystem::GramSystem(int n, int p, std::vector<double> g, std::vector<double> b, double yty)
    : n_(n), p_(p), g_(std::move(g)), b_(std::move(b)), yty_(yty) {
  if (n_ < 2 || p_ < 1) throw InternalError("GramSystem needs n >= 2 and p >= 1");
  if (p_ > IndexSet::kMaxIndex)
    throw DataError("at most " + std::to_string(IndexSet::kMaxIndex) + " predictors supported, got " +
                    std::to_string(p_));
  std::size_t d = static_cast<std::size_t>(dim());
  if (g_.size() != d * d || b_.size() != d) throw InternalError("GramSystem size mismatch");
  if (!(yty_ >= 0.0) || !std::isfinite(yty_)) throw InternalError("GramSystem yty must be finite and nonnegative");
}

double GramSystem::rss_floor() const { return std::max(1e-12 * yty_, 1e-300); }

GramSystem build_gram(const Dataset& d) {
  const int n = d.n();
  const int p = d.p();
  const std::size_t dim = static_cast<std::size_t>(p) + 1;
  std::vector<double> g(dim * dim, 0.0);
  std::vector<double> b(dim, 0.0);

  auto col = [&](int j) -> const double* {
    return j == 0 ? nullptr : d.column(j).data();
  };
  auto dot = [&](int i, int j) {
    const double* a = col(i);
    const double* c = col(j);
    double s = 0.0;
    if (a == nullptr && c == nullptr) return static_cast<double>(n);
    if (a == nullptr) std::swap(a, c);
    if (c == nullptr) {
      for (int r = 0; r < n; ++r) s += a[r];
      return s;
    }
    for (int r = 0; r < n; ++r) s += a[r] * c[r];
    return s;
  };

  for (int i = 0; i <= p; ++i) {
    for (int j = i; j <= p; ++j) {
      double v = dot(i, j);
      g[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)] = v;
      g[static_cast<std::size_t>(j) * dim + static_cast<std::size_t>(i)] = v;
    }
  }

  const double* y = d.response().data();
  for (int i = 0; i <= p; ++i) {
    double s = 0.0;
    if (i == 0) {
      for (int r = 0; r < n; ++r) s += y[r];
    } else {
      const double* a = col(i);
      for (int r = 0; r < n; ++r) s += a[r] * y[r];
    }
    b[static_cast<std::size_t>(i)] = s;
  }

  double yty = 0.0;
  for (int r = 0; r < n; ++r) yty += y[r] * y[r];

  return GramSystem(n, p, std::move(g), std::move(b), yty);
}

}  // namespace aicbnb
