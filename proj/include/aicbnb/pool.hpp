#pragma once

#include <vector>

#include "aicbnb/index_set.hpp"

namespace aicbnb {

/// Keeps the N best feasible subsets seen so far, sorted ascending by
/// objective and deduplicated by subset. Feeds most-frequent branching.
class SolutionPool {
 public:
  struct Entry {
    IndexSet subset;
    double objective;
  };

  explicit SolutionPool(int capacity);

  void add(const IndexSet& subset, double objective);

  const std::vector<Entry>& entries() const { return entries_; }
  int capacity() const { return capacity_; }
  bool empty() const { return entries_.empty(); }

 private:
  int capacity_;
  std::vector<Entry> entries_;
};

}  // namespace aicbnb
