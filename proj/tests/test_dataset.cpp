#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "aicbnb/dataset.hpp"
#include "aicbnb/errors.hpp"
#include "support/instances.hpp"

using namespace aicbnb;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("load_csv parses a small file") {
  std::string path = write_temp("small.csv", "a,b,y\n1,4,7\n2,5,8\n3,6,9\n");
  Dataset d = load_csv(path, "y");
  CHECK(d.n() == 3);
  CHECK(d.p() == 2);
  CHECK(d.column(1) == std::vector<double>{1, 2, 3});
  CHECK(d.column(2) == std::vector<double>{4, 5, 6});
  CHECK(d.response() == std::vector<double>{7, 8, 9});
  CHECK(d.predictor_name(1) == "a");
  CHECK(d.response_name() == "y");
  std::remove(path.c_str());
}

TEST_CASE("load_csv resolves the response by position") {
  std::string path = write_temp("pos.csv", "a,b,y\n1,4,7\n2,5,8\n");
  Dataset d1 = load_csv(path, "2");
  CHECK(d1.response_name() == "y");
  Dataset d2 = load_csv(path, "-1");
  CHECK(d2.response_name() == "y");
  Dataset d3 = load_csv(path, "0");
  CHECK(d3.response_name() == "a");
  CHECK(d3.p() == 2);
  std::remove(path.c_str());
}

TEST_CASE("load_csv rejects bad input") {
  CHECK_THROWS_AS(load_csv("/tmp/definitely-missing-file.csv", "y"), DataError);

  std::string nan_path = write_temp("nan.csv", "a,y\n1,2\nNaN,3\n");
  CHECK_THROWS_WITH_AS(load_csv(nan_path, "y"),
                       doctest::Contains("row 3"), DataError);
  CHECK_THROWS_WITH_AS(load_csv(nan_path, "y"),
                       doctest::Contains("column 1"), DataError);
  std::remove(nan_path.c_str());

  std::string one_row = write_temp("onerow.csv", "a,y\n1,2\n");
  CHECK_THROWS_AS(load_csv(one_row, "y"), DataError);
  std::remove(one_row.c_str());

  std::string ok = write_temp("resp.csv", "a,y\n1,2\n3,4\n");
  CHECK_THROWS_AS(load_csv(ok, "zz"), DataError);

  std::string ragged = write_temp("ragged.csv", "a,y\n1,2\n3\n");
  CHECK_THROWS_AS(load_csv(ragged, "y"), DataError);
  std::remove(ok.c_str());
  std::remove(ragged.c_str());
}

TEST_CASE("standardize centers and scales with divisor n-1") {
  Dataset d({{1, 2, 3}}, {2, 4, 9}, {"x1", "y"});
  Dataset s = standardize(d);
  CHECK(s.column(1)[0] == doctest::Approx(-1.0));
  CHECK(s.column(1)[1] == doctest::Approx(0.0));
  CHECK(s.column(1)[2] == doctest::Approx(1.0));
  CHECK(s.standardized());
  CHECK(s.standardization().predictors[0].mean == doctest::Approx(2.0));
  CHECK(s.standardization().predictors[0].scale == doctest::Approx(1.0));

  double mean = 0.0;
  for (double v : s.response()) mean += v;
  CHECK(std::abs(mean / 3.0) <= 1e-10);
}

TEST_CASE("standardize flags constant columns and leaves them alone") {
  Dataset d({{5, 5, 5}, {1, 2, 4}}, {1, 2, 3}, {"c", "x", "y"});
  Dataset s = standardize(d);
  CHECK(s.standardization().predictors[0].constant);
  CHECK_FALSE(s.standardization().predictors[1].constant);
  CHECK(s.column(1) == std::vector<double>{5, 5, 5});
  CHECK(constant_predictors(s) == std::vector<int>{1});
  CHECK(constant_predictors(d) == std::vector<int>{1});
}

TEST_CASE("standardize rejects a constant response") {
  Dataset d({{1, 2, 3}}, {4, 4, 4}, {"x1", "y"});
  CHECK_THROWS_AS(standardize(d), DataError);
}

TEST_CASE("standardized columns have mean 0 and sample std 1") {
  Dataset d = aicbnb::testing::make_random_dataset(11u, 20, 4);
  Dataset s = standardize(d);
  for (int j = 1; j <= s.p(); ++j) {
    double mean = 0.0;
    for (double v : s.column(j)) mean += v;
    mean /= s.n();
    CHECK(std::abs(mean) <= 1e-10);
    double var = 0.0;
    for (double v : s.column(j)) var += (v - mean) * (v - mean);
    double sd = std::sqrt(var / (s.n() - 1));
    CHECK(std::abs(sd - 1.0) <= 1e-10);
  }
}

TEST_CASE("destandardize round-trips") {
  Dataset d = aicbnb::testing::make_random_dataset(12u, 20, 4);
  Dataset back = destandardize(standardize(d));
  for (int j = 1; j <= d.p(); ++j)
    for (int i = 0; i < d.n(); ++i)
      CHECK(back.column(j)[static_cast<std::size_t>(i)] ==
            doctest::Approx(d.column(j)[static_cast<std::size_t>(i)]).epsilon(1e-12));
  for (int i = 0; i < d.n(); ++i)
    CHECK(back.response()[static_cast<std::size_t>(i)] ==
          doctest::Approx(d.response()[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("standardize twice is rejected") {
  Dataset d = aicbnb::testing::make_random_dataset(13u, 10, 2);
  Dataset s = standardize(d);
  CHECK_THROWS_AS(standardize(s), UsageError);
  CHECK_THROWS_AS(destandardize(d), UsageError);
}

TEST_CASE("dataset validation") {
  CHECK_THROWS_AS(Dataset({{1, 2}}, {1}, {"x", "y"}), DataError);        // length mismatch
  CHECK_THROWS_AS(Dataset({{1}}, {1}, {"x", "y"}), DataError);           // n < 2
  CHECK_THROWS_AS(Dataset({{1, 2}}, {1, 2}, {"y"}), DataError);          // missing name
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Dataset({{1, inf}}, {1, 2}, {"x", "y"}), DataError);   // non-finite
}
