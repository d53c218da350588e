#include "aicbnb/enumerate.hpp"

#include <vector>

#include "aicbnb/errors.hpp"

namespace aicbnb {

EnumerationResult enumerate_all(const GramSystem& g, int cap, bool with_table) {
  const int p = g.p();
  if (p > cap)
    throw UsageError("enumeration over 2^" + std::to_string(p) + " subsets exceeds the cap of " +
                     std::to_string(cap) + " predictors");

  EnumerationResult out;
  bool have_best = false;
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(p));

  const std::uint64_t total = std::uint64_t{1} << p;
  if (with_table) out.table.reserve(static_cast<std::size_t>(total));

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    idx.clear();
    for (int j = 1; j <= p; ++j)
      if ((mask >> (j - 1)) & 1u) idx.push_back(j);

    OlsFit fit = solve_subset(g, std::span<const int>(idx));
    ObjectiveValue obj = objective(fit.rss, static_cast<int>(idx.size()), g.n(), g.rss_floor());

    if (with_table) {
      EnumerationRow row;
      row.mask = mask;
      row.k = obj.k;
      row.rss = fit.rss;
      row.objective = obj.value;
      row.aic = full_aic(obj, g.n());
      out.table.push_back(row);
    }

    IndexSet subset = IndexSet::from_indices(idx);
    bool better = !have_best || obj.value < out.best.value ||
                  (obj.value == out.best.value &&
                   (obj.k < out.best.k ||
                    (obj.k == out.best.k && subset.lex_less(out.best_subset))));
    if (better) {
      out.best = obj;
      out.best_subset = subset;
      have_best = true;
    }
  }

  return out;
}

}  // namespace aicbnb
