#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace aicbnb {

/// A set of predictor indices drawn from {1, ..., 127}, stored as a
/// fixed-width bitmask. Index 0 names the intercept column elsewhere in the
/// code base and is never a member of an IndexSet.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 127;

  constexpr IndexSet() = default;

  IndexSet(std::initializer_list<int> indices) {
    for (int j : indices) insert(j);
  }

  static IndexSet full(int p) {
    IndexSet s;
    for (int j = 1; j <= p; ++j) s.insert(j);
    return s;
  }

  static IndexSet from_indices(std::span<const int> indices) {
    IndexSet s;
    for (int j : indices) s.insert(j);
    return s;
  }

  bool contains(int j) const {
    assert(j >= 0 && j <= kMaxIndex);
    return (words_[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
  }

  void insert(int j) {
    assert(j >= 1 && j <= kMaxIndex);
    words_[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
  }

  void erase(int j) {
    assert(j >= 1 && j <= kMaxIndex);
    words_[static_cast<std::size_t>(j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
  }

  IndexSet with(int j) const {
    IndexSet s = *this;
    s.insert(j);
    return s;
  }

  IndexSet without(int j) const {
    IndexSet s = *this;
    s.erase(j);
    return s;
  }

  int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }

  bool empty() const { return words_[0] == 0 && words_[1] == 0; }

  bool is_subset_of(const IndexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  bool intersects(const IndexSet& o) const {
    return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
  }

  friend IndexSet operator|(const IndexSet& a, const IndexSet& b) {
    IndexSet s;
    s.words_[0] = a.words_[0] | b.words_[0];
    s.words_[1] = a.words_[1] | b.words_[1];
    return s;
  }

  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    IndexSet s;
    s.words_[0] = a.words_[0] & b.words_[0];
    s.words_[1] = a.words_[1] & b.words_[1];
    return s;
  }

  /// Elements of this set that are not in `o`.
  IndexSet minus(const IndexSet& o) const {
    IndexSet s;
    s.words_[0] = words_[0] & ~o.words_[0];
    s.words_[1] = words_[1] & ~o.words_[1];
    return s;
  }

  /// Smallest member, or -1 when empty.
  int lowest() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[static_cast<std::size_t>(w)];
      while (bits != 0) {
        int j = 64 * w + std::countr_zero(bits);
        f(j);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int j) { out.push_back(j); });
    return out;
  }

  /// Lexicographic order on the ascending index sequences, so {1,4} < {2,3}
  /// and a strict prefix sorts first.
  bool lex_less(const IndexSet& o) const {
    std::uint64_t aw0 = words_[0], aw1 = words_[1];
    std::uint64_t bw0 = o.words_[0], bw1 = o.words_[1];
    while (true) {
      bool a_empty = (aw0 == 0 && aw1 == 0);
      bool b_empty = (bw0 == 0 && bw1 == 0);
      if (a_empty || b_empty) return !a_empty ? false : !b_empty;
      int a = aw0 ? std::countr_zero(aw0) : 64 + std::countr_zero(aw1);
      int b = bw0 ? std::countr_zero(bw0) : 64 + std::countr_zero(bw1);
      if (a != b) return a < b;
      if (aw0)
        aw0 &= aw0 - 1;
      else
        aw1 &= aw1 - 1;
      if (bw0)
        bw0 &= bw0 - 1;
      else
        bw1 &= bw1 - 1;
    }
  }

  std::uint64_t word(int i) const {
    return words_[static_cast<std::size_t>(i)];
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int j) {
      if (!first) out += ",";
      out += std::to_string(j);
      first = false;
    });
    out += "}";
    return out;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

}  // namespace aicbnb
