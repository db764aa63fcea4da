#include "sumfree/setcore.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sumfree {

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitExceeded("count overflow in multiplication");
  return r;
}

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitExceeded("count overflow in addition");
  return r;
}

IntSubset::IntSubset(GroundSet ground)
    : n_(ground.n), words_(static_cast<std::size_t>((ground.n + 63) / 64), 0) {}

IntSubset::IntSubset(GroundSet ground, std::span<const int> members) : IntSubset(ground) {
  for (int x : members) insert(x);
}

IntSubset::IntSubset(GroundSet ground, std::initializer_list<int> members)
    : IntSubset(ground, std::span<const int>(members.begin(), members.size())) {}

IntSubset IntSubset::interval(GroundSet ground, int lo, int hi) {
  IntSubset s(ground);
  for (int x = std::max(lo, 1); x <= std::min(hi, ground.n); ++x) s.insert(x);
  return s;
}

IntSubset IntSubset::odds(GroundSet ground) {
  IntSubset s(ground);
  for (int x = 1; x <= ground.n; x += 2) s.insert(x);
  return s;
}

IntSubset IntSubset::evens(GroundSet ground) {
  IntSubset s(ground);
  for (int x = 2; x <= ground.n; x += 2) s.insert(x);
  return s;
}

IntSubset IntSubset::from_mask(GroundSet ground, std::uint64_t mask) {
  if (ground.n > 64) throw PreconditionError("from_mask needs n <= 64");
  IntSubset s(ground);
  if (ground.n < 64) mask &= (std::uint64_t{1} << ground.n) - 1;
  s.words_[0] = mask;
  return s;
}

void IntSubset::insert(int x) {
  if (x < 1 || x > n_)
    throw PreconditionError("element " + std::to_string(x) + " outside [" + std::to_string(n_) + "]");
  const auto b = static_cast<unsigned>(x - 1);
  words_[b / 64] |= std::uint64_t{1} << (b % 64);
}

void IntSubset::erase(int x) {
  if (x < 1 || x > n_) return;
  const auto b = static_cast<unsigned>(x - 1);
  words_[b / 64] &= ~(std::uint64_t{1} << (b % 64));
}

int IntSubset::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool IntSubset::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<int> IntSubset::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w) + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::optional<int> IntSubset::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]) + 1;
  return std::nullopt;
}

std::optional<int> IntSubset::max() const {
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i]) return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]) + 1;
  return std::nullopt;
}

std::uint64_t IntSubset::mask() const {
  if (n_ > 64) throw PreconditionError("mask() needs n <= 64");
  return words_[0];
}

bool IntSubset::is_subset_of(const IntSubset& o) const {
  check_same_ground(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

void IntSubset::check_same_ground(const IntSubset& o) const {
  if (n_ != o.n_) throw PreconditionError("subsets of different ground sets");
}

IntSubset IntSubset::operator|(const IntSubset& o) const {
  check_same_ground(o);
  IntSubset r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

IntSubset IntSubset::operator&(const IntSubset& o) const {
  check_same_ground(o);
  IntSubset r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

IntSubset IntSubset::operator-(const IntSubset& o) const {
  check_same_ground(o);
  IntSubset r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

std::strong_ordering operator<=>(const IntSubset& a, const IntSubset& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  if (auto c = std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
      c != 0)
    return c;
  return a.n_ <=> b.n_;
}

SetStats stats(const IntSubset& s) {
  SetStats st;
  const auto m = s.members();
  st.size = static_cast<int>(m.size());
  if (!m.empty()) {
    st.min = m.front();
    st.max = m.back();
  }
  if (m.size() >= 2) st.min2 = m[1];
  st.even_count = static_cast<int>(std::count_if(m.begin(), m.end(), [](int x) { return x % 2 == 0; }));
  return st;
}

bool is_schur_triple(std::int64_t x, std::int64_t y, std::int64_t z) { return x + y == z; }

bool unordered_schur(std::int64_t a, std::int64_t b, std::int64_t c) {
  return a + b == c || a + c == b || b + c == a;
}

bool is_sum_free(const IntSubset& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      if (m[i] + m[j] > s.n()) break;
      if (s.contains(m[i] + m[j])) return false;
    }
  return true;
}

namespace {

// S is sum-free; does S + {x} stay sum-free?
bool can_add(const IntSubset& s, const std::vector<int>& members, int x) {
  if (s.contains(2 * x)) return false;
  if (x % 2 == 0 && s.contains(x / 2)) return false;
  for (int y : members) {
    if (s.contains(x + y)) return false;
    if (y < x && s.contains(x - y)) return false;
    if (y > x && s.contains(y - x)) return false;
  }
  return true;
}

}  // namespace

IntSubset addable_elements(const IntSubset& s) {
  if (!is_sum_free(s)) throw PreconditionError("addable_elements: set is not sum-free");
  const auto m = s.members();
  IntSubset out(s.ground());
  for (int x = 1; x <= s.n(); ++x)
    if (!s.contains(x) && can_add(s, m, x)) out.insert(x);
  return out;
}

bool is_maximal_sum_free(const IntSubset& s) {
  return is_sum_free(s) && addable_elements(s).empty();
}

std::int64_t schur_triple_count(const IntSubset& f) {
  const auto m = f.members();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      if (m[i] + m[j] > f.n()) break;
      if (f.contains(m[i] + m[j])) ++count;
    }
  return count;
}

std::vector<int> sumset(const IntSubset& a, const IntSubset& b) {
  std::vector<int> out;
  const auto ma = a.members();
  const auto mb = b.members();
  out.reserve(ma.size() * mb.size());
  for (int x : ma)
    for (int y : mb) out.push_back(x + y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sumfree
