#include "aicbnb/pool.hpp"

#include <algorithm>

#include "aicbnb/errors.hpp"

namespace aicbnb {

SolutionPool::SolutionPool(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw InternalError("pool capacity must be positive");
  entries_.reserve(static_cast<std::size_t>(capacity) + 1);
}

void SolutionPool::add(const IndexSet& subset, double objective) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].subset == subset) {
      if (objective >= entries_[i].objective) return;
      entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), objective,
                              [](double v, const Entry& e) { return v < e.objective; });
  entries_.insert(pos, Entry{subset, objective});
  if (static_cast<int>(entries_.size()) > capacity_) entries_.pop_back();
}

}  // namespace aicbnb
