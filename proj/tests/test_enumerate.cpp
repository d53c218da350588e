#include "doctest.h"

#include <bit>
#include <cmath>
#include <set>

#include "aicbnb/enumerate.hpp"
#include "aicbnb/errors.hpp"
#include "aicbnb/gram.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"

using namespace aicbnb;
namespace tt = aicbnb::testing;

TEST_CASE("enumeration matches the QR oracle") {
  for (unsigned seed : {51u, 52u, 53u, 54u}) {
    Dataset d = tt::make_random_dataset(seed, 35, 7);
    GramSystem g = build_gram(d);
    EnumerationResult got = enumerate_all(g);
    tt::OracleBest want = tt::oracle_best_subset(d);
    CHECK(got.best_subset == want.subset);
    CHECK(got.best.value == doctest::Approx(want.objective).epsilon(1e-9));
    CHECK(got.best.k == want.k);
  }
}

TEST_CASE("full table covers every subset consistently") {
  Dataset d = tt::make_random_dataset(55u, 30, 5);
  GramSystem g = build_gram(d);
  EnumerationResult res = enumerate_all(g, 20, true);
  REQUIRE(res.table.size() == 32u);

  std::set<std::uint64_t> masks;
  double best_seen = res.table.front().objective;
  for (const EnumerationRow& row : res.table) {
    masks.insert(row.mask);
    CHECK(row.k == std::popcount(row.mask));
    double expect_obj = g.n() * std::log(std::max(row.rss, g.rss_floor())) + 2.0 * row.k;
    CHECK(row.objective == doctest::Approx(expect_obj).epsilon(1e-12));
    CHECK(row.aic == doctest::Approx(full_aic(row.objective, g.n())).epsilon(1e-12));
    best_seen = std::min(best_seen, row.objective);
  }
  CHECK(masks.size() == 32u);
  CHECK(res.best.value == doctest::Approx(best_seen).epsilon(1e-12));
  // the table is not populated unless asked for
  CHECK(enumerate_all(g).table.empty());
}

TEST_CASE("ties break toward fewer predictors then lexicographic order") {
  // x2 duplicates x1, so {1}, {2}, {1,2} all reach the same rss.
  std::vector<double> x{0.2, 1.4, -0.8, 2.2, 3.0, -1.7};
  std::vector<double> y{0.5, 2.9, -1.5, 4.5, 6.1, -3.3};
  Dataset d({x, x}, y, {"x1", "x2", "y"});
  EnumerationResult res = enumerate_all(build_gram(d));
  CHECK(res.best_subset == IndexSet{1});
  CHECK(res.best.k == 1);
}

TEST_CASE("predictor cap guards the exponential sweep") {
  Dataset d = tt::make_random_dataset(56u, 25, 6);
  GramSystem g = build_gram(d);
  CHECK_THROWS_AS(enumerate_all(g, 5), UsageError);
  CHECK_NOTHROW(enumerate_all(g, 6));
}

TEST_CASE("perfect-fit subsets clamp instead of diverging") {
  Dataset d = tt::make_perfect_fit_dataset(57u, 20, 4);
  EnumerationResult res = enumerate_all(build_gram(d));
  CHECK(std::isfinite(res.best.value));
  CHECK(res.best_subset.contains(1));
  CHECK(res.best_subset.contains(2));
}
