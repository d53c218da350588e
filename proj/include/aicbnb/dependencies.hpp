#pragma once

#include <vector>

#include "aicbnb/dataset.hpp"
#include "aicbnb/index_set.hpp"

namespace aicbnb {

/// One linear dependency among data columns: the column `dependent` equals
/// intercept_coefficient * x^0 + sum_k coefficients[k] * x^members[k].
/// Together with the dependent column itself, `members` forms a set whose
/// columns (with the intercept) are linearly dependent, and every member
/// carries a nonzero coefficient in that relation.
struct DependencySet {
  int dependent = 0;
  std::vector<int> members;          // ascending, excludes `dependent`
  std::vector<double> coefficients;  // aligned with members
  double intercept_coefficient = 0.0;
  bool uses_intercept = false;
  IndexSet full_set;  // members plus dependent
};

class DependencyCollection {
 public:
  DependencyCollection() = default;
  explicit DependencyCollection(std::vector<DependencySet> sets) : sets_(std::move(sets)) {}

  bool empty() const { return sets_.empty(); }
  std::size_t size() const { return sets_.size(); }
  const DependencySet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  void add(DependencySet set) { sets_.push_back(std::move(set)); }

 private:
  std::vector<DependencySet> sets_;
};

/// Scans columns x^0, x^1, ..., x^p in order, growing an independent basis;
/// each column inside the span of the basis is recorded with the (unique)
/// coefficients expressing it in terms of the basis. A column counts as
/// dependent when its projection residual is at most 1e-8 times its norm.
DependencyCollection find_dependencies(const Dataset& d);

}  // namespace aicbnb
