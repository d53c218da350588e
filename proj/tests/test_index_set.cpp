#include "doctest.h"

#include "aicbnb/index_set.hpp"

using aicbnb::IndexSet;

TEST_CASE("insert, erase, contains") {
  IndexSet s;
  CHECK(s.empty());
  s.insert(3);
  s.insert(100);
  CHECK(s.contains(3));
  CHECK(s.contains(100));
  CHECK_FALSE(s.contains(2));
  CHECK(s.count() == 2);
  s.erase(3);
  CHECK_FALSE(s.contains(3));
  CHECK(s.count() == 1);
}

TEST_CASE("full and from_indices") {
  IndexSet f = IndexSet::full(5);
  CHECK(f.count() == 5);
  for (int j = 1; j <= 5; ++j) CHECK(f.contains(j));
  CHECK_FALSE(f.contains(0));
  CHECK_FALSE(f.contains(6));

  std::vector<int> idx{2, 7, 64, 127};
  IndexSet s = IndexSet::from_indices(idx);
  CHECK(s.to_vector() == idx);
}

TEST_CASE("set algebra") {
  IndexSet a{1, 2, 70};
  IndexSet b{2, 3};
  CHECK((a | b).count() == 4);
  CHECK((a & b).to_vector() == std::vector<int>{2});
  CHECK(a.minus(b).to_vector() == std::vector<int>{1, 70});
  CHECK(b.is_subset_of(a | b));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK_FALSE(IndexSet{5}.intersects(b));
}

TEST_CASE("with and without do not mutate") {
  IndexSet a{1};
  IndexSet b = a.with(2);
  CHECK(a.count() == 1);
  CHECK(b.count() == 2);
  CHECK(b.without(1).to_vector() == std::vector<int>{2});
}

TEST_CASE("lowest and iteration order ascend") {
  IndexSet s{90, 4, 17};
  CHECK(s.lowest() == 4);
  CHECK(s.to_vector() == std::vector<int>{4, 17, 90});
  CHECK(IndexSet{}.lowest() == -1);
}

TEST_CASE("lexicographic order on index sequences") {
  CHECK(IndexSet{1, 4}.lex_less(IndexSet{2, 3}));
  CHECK_FALSE(IndexSet{2, 3}.lex_less(IndexSet{1, 4}));
  CHECK(IndexSet{1}.lex_less(IndexSet{1, 2}));  // strict prefix first
  CHECK_FALSE(IndexSet{1, 2}.lex_less(IndexSet{1}));
  CHECK_FALSE(IndexSet{1, 2}.lex_less(IndexSet{1, 2}));
  CHECK(IndexSet{}.lex_less(IndexSet{1}));
  CHECK(IndexSet{1, 65}.lex_less(IndexSet{1, 66}));
}

TEST_CASE("to_string") {
  CHECK(IndexSet{}.to_string() == "{}");
  CHECK(IndexSet{3, 1}.to_string() == "{1,3}");
}
