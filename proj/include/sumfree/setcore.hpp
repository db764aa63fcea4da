#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

/// The interval [n] = {1, ..., n}.
struct GroundSet {
  int n;

  explicit GroundSet(int n_) : n(n_) {
    if (n_ < 1) throw PreconditionError("ground set needs n >= 1");
  }
  friend bool operator==(GroundSet, GroundSet) = default;
};

/// A subset of [n] stored as a bitset (bit x-1 <-> element x).
class IntSubset {
 public:
  explicit IntSubset(GroundSet ground);
  IntSubset(GroundSet ground, std::span<const int> members);
  IntSubset(GroundSet ground, std::initializer_list<int> members);

  static IntSubset interval(GroundSet ground, int lo, int hi);
  static IntSubset odds(GroundSet ground);
  static IntSubset evens(GroundSet ground);
  static IntSubset full(GroundSet ground) { return interval(ground, 1, ground.n); }
  /// Low n bits of `mask` (bit i <-> element i+1); requires n <= 64.
  static IntSubset from_mask(GroundSet ground, std::uint64_t mask);

  GroundSet ground() const { return GroundSet(n_); }
  int n() const { return n_; }

  bool contains(int x) const {
    if (x < 1 || x > n_) return false;
    const auto b = static_cast<unsigned>(x - 1);
    return (words_[b / 64] >> (b % 64)) & 1u;
  }
  void insert(int x);
  void erase(int x);

  int size() const;
  bool empty() const;
  std::vector<int> members() const;
  std::optional<int> min() const;
  std::optional<int> max() const;
  /// Only valid for n <= 64.
  std::uint64_t mask() const;

  bool is_subset_of(const IntSubset& other) const;

  IntSubset operator|(const IntSubset& o) const;
  IntSubset operator&(const IntSubset& o) const;
  IntSubset operator-(const IntSubset& o) const;

  friend bool operator==(const IntSubset&, const IntSubset&) = default;
  /// Canonical order: lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const IntSubset& a, const IntSubset& b);

 private:
  void check_same_ground(const IntSubset& o) const;

  int n_;
  std::vector<std::uint64_t> words_;
};

struct SetStats {
  std::optional<int> min;
  std::optional<int> min2;
  std::optional<int> max;
  int even_count = 0;
  int size = 0;
};

SetStats stats(const IntSubset& s);

bool is_schur_triple(std::int64_t x, std::int64_t y, std::int64_t z);
bool unordered_schur(std::int64_t a, std::int64_t b, std::int64_t c);

bool is_sum_free(const IntSubset& s);
/// Elements x of [n] \ S with S + {x} sum-free. Throws if S is not sum-free.
IntSubset addable_elements(const IntSubset& s);
bool is_maximal_sum_free(const IntSubset& s);
/// Triples x <= y, x + y = z with x, y, z in F.
std::int64_t schur_triple_count(const IntSubset& f);
/// A + B, not truncated to [n]; sorted, duplicates removed.
std::vector<int> sumset(const IntSubset& a, const IntSubset& b);

}  // namespace sumfree
