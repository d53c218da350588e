#pragma once

#include <vector>

#include "aicbnb/dataset.hpp"

namespace aicbnb {

/// Inner products of the intercept-augmented design [x^0 x^1 ... x^p] with
/// itself and with the response. Every subset least-squares problem is solved
/// from these aggregates without touching the rows again.
class GramSystem {
 public:
  GramSystem(int n, int p, std::vector<double> g, std::vector<double> b, double yty);

  int n() const { return n_; }
  int p() const { return p_; }
  int dim() const { return p_ + 1; }

  /// Inner product of columns i and j, 0 <= i,j <= p (0 is the intercept).
  double g(int i, int j) const { return g_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(j)]; }
  /// Inner product of column i with the response.
  double b(int i) const { return b_[static_cast<std::size_t>(i)]; }
  double yty() const { return yty_; }

  /// Smallest residual sum of squares the objective arithmetic will accept;
  /// values below are clamped and flagged.
  double rss_floor() const;

 private:
  int n_;
  int p_;
  std::vector<double> g_;  // (p+1)^2, row-major, symmetric
  std::vector<double> b_;  // p+1
  double yty_;
};

GramSystem build_gram(const Dataset& d);

}  // namespace aicbnb
