#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

struct GroupElem {
  std::vector<int> coords;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

/// Z_{n_1} x ... x Z_{n_k}. Elements are also addressed by a flat index in
/// [0, order) using mixed radix with the first factor most significant.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);
  /// Parses "Z4xZ2xZ2" (also accepts "Z_4 x Z_2" and "Z2^3").
  static AbelianGroup parse(std::string_view desc);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  std::string to_string() const;

  int index(const GroupElem& g) const;
  GroupElem elem(int index) const;
  GroupElem zero() const { return GroupElem{std::vector<int>(factors_.size(), 0)}; }

  GroupElem add(const GroupElem& g, const GroupElem& h) const;
  GroupElem neg(const GroupElem& g) const;
  int add(int a, int b) const { return add_table_[static_cast<std::size_t>(a * order_ + b)]; }
  int neg(int a) const { return neg_table_[static_cast<std::size_t>(a)]; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

 private:
  void check(const GroupElem& g) const;

  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
  std::vector<int> add_table_;
  std::vector<int> neg_table_;
};

/// A subset of a group, members kept as sorted flat indices.
class GroupSubset {
 public:
  explicit GroupSubset(AbelianGroup group) : group_(std::move(group)), bits_(static_cast<std::size_t>(group_.order()), 0) {}
  GroupSubset(AbelianGroup group, const std::vector<int>& indices);

  const AbelianGroup& group() const { return group_; }
  bool contains(int index) const { return index >= 0 && index < group_.order() && bits_[static_cast<std::size_t>(index)]; }
  bool contains(const GroupElem& g) const { return contains(group_.index(g)); }
  void insert(int index);
  void insert(const GroupElem& g) { insert(group_.index(g)); }
  std::vector<int> members() const;
  int size() const;

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  AbelianGroup group_;
  std::vector<char> bits_;
};

bool is_sum_free_group(const GroupSubset& s);
bool is_maximal_sum_free_group(const GroupSubset& s);

/// Largest sum-free subset size by branch and bound. Throws LimitExceeded
/// when |G| > size_limit.
int mu(const AbelianGroup& g, int size_limit = 36);

/// The unique y with 2y = x. Requires |G| odd.
GroupElem unique_half(const AbelianGroup& g, const GroupElem& x);

/// Cosets 0+H, ..., (r-1)+H where H is the kernel of g -> g_i mod r for the
/// first factor i with r | n_i. Throws when no factor is divisible by r.
std::vector<GroupSubset> coset_partition(const AbelianGroup& g, int r);

/// Number of sum-free / maximal sum-free subsets of G.
Count f_group(const AbelianGroup& g, int workers = 1, int size_limit = 40);
Count f_max_group(const AbelianGroup& g, int workers = 1, int size_limit = 40);

}  // namespace sumfree
