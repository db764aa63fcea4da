#include "sumfree/abelian.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "sumfree/schur_engine.hpp"

namespace sumfree {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw PreconditionError("group needs at least one cyclic factor");
  for (int f : factors_) {
    if (f < 2) throw PreconditionError("cyclic factors must have order >= 2");
    if (order_ > (1 << 20) / f) throw LimitExceeded("group order too large");
    order_ *= f;
    exponent_ = std::lcm(exponent_, f);
  }
  const auto n = static_cast<std::size_t>(order_);
  if (order_ <= 1024) {
    add_table_.resize(n * n);
    neg_table_.resize(n);
    for (int a = 0; a < order_; ++a) {
      const auto ea = elem(a);
      neg_table_[static_cast<std::size_t>(a)] = index(neg(ea));
      for (int b = 0; b < order_; ++b)
        add_table_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = index(add(ea, elem(b)));
    }
  } else {
    throw LimitExceeded("group order above 1024 is not supported");
  }
}

AbelianGroup AbelianGroup::parse(std::string_view desc) {
  std::string s;
  for (char c : desc)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s.push_back(c);
  std::vector<int> factors;
  std::size_t pos = 0;
  auto fail = [&] { throw PreconditionError("bad group descriptor '" + std::string(desc) + "'"); };
  while (pos < s.size()) {
    if (s[pos] != 'Z' && s[pos] != 'z') fail();
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail();
    const int order = std::stoi(s.substr(start, pos - start));
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail();
      power = std::stoi(s.substr(start, pos - start));
    }
    for (int i = 0; i < power; ++i) factors.push_back(order);
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '*') fail();
      ++pos;
      if (pos == s.size()) fail();
    }
  }
  if (factors.empty()) fail();
  return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

void AbelianGroup::check(const GroupElem& g) const {
  if (g.coords.size() != factors_.size()) throw PreconditionError("element does not belong to " + to_string());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i])
      throw PreconditionError("element coordinate out of range for " + to_string());
}

int AbelianGroup::index(const GroupElem& g) const {
  check(g);
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g.coords[i];
  return idx;
}

GroupElem AbelianGroup::elem(int index) const {
  if (index < 0 || index >= order_) throw PreconditionError("element index out of range");
  GroupElem g{std::vector<int>(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g.coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return g;
}

GroupElem AbelianGroup::add(const GroupElem& g, const GroupElem& h) const {
  check(g);
  check(h);
  GroupElem r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (g.coords[i] + h.coords[i]) % factors_[i];
  return r;
}

GroupElem AbelianGroup::neg(const GroupElem& g) const {
  check(g);
  GroupElem r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (factors_[i] - g.coords[i]) % factors_[i];
  return r;
}

GroupSubset::GroupSubset(AbelianGroup group, const std::vector<int>& indices) : GroupSubset(std::move(group)) {
  for (int i : indices) insert(i);
}

void GroupSubset::insert(int index) {
  if (index < 0 || index >= group_.order()) throw PreconditionError("element index outside group");
  bits_[static_cast<std::size_t>(index)] = 1;
}

std::vector<int> GroupSubset::members() const {
  std::vector<int> out;
  for (int i = 0; i < group_.order(); ++i)
    if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

int GroupSubset::size() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

bool is_sum_free_group(const GroupSubset& s) {
  const auto& g = s.group();
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (s.contains(g.add(m[i], m[j]))) return false;
  return true;
}

bool is_maximal_sum_free_group(const GroupSubset& s) {
  if (!is_sum_free_group(s)) return false;
  for (int x = 0; x < s.group().order(); ++x) {
    if (s.contains(x)) continue;
    GroupSubset t = s;
    t.insert(x);
    if (is_sum_free_group(t)) return false;
  }
  return true;
}

namespace {

struct MuSearch {
  const SchurHypergraph& h;
  int n;
  int best = 0;

  void run(int next, std::uint64_t chosen, int size) {
    // Undecided elements that could still join.
    int open = 0;
    for (int v = next; v < n; ++v)
      if (h.can_add(v, chosen)) ++open;
    if (size + open <= best) return;
    while (next < n && !h.can_add(next, chosen)) ++next;
    if (next == n) {
      best = std::max(best, size);
      return;
    }
    run(next + 1, chosen | (std::uint64_t{1} << next), size + 1);
    run(next + 1, chosen, size);
  }
};

}  // namespace

int mu(const AbelianGroup& g, int size_limit) {
  if (g.order() > size_limit || g.order() > 64)
    throw LimitExceeded("mu: |G| = " + std::to_string(g.order()) + " exceeds limit " + std::to_string(size_limit));
  const auto h = SchurHypergraph::group(g);
  MuSearch s{h, g.order()};
  s.run(0, 0, 0);
  return s.best;
}

GroupElem unique_half(const AbelianGroup& g, const GroupElem& x) {
  if (g.order() % 2 == 0) throw PreconditionError("unique_half: 2y = x need not have a unique solution in a group of even order");
  GroupElem y = x;
  g.index(x);
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    const int f = g.factors()[i];
    y.coords[i] = static_cast<int>((static_cast<long long>(x.coords[i]) * ((f + 1) / 2)) % f);
  }
  return y;
}

std::vector<GroupSubset> coset_partition(const AbelianGroup& g, int r) {
  if (r < 1) throw PreconditionError("coset_partition: r must be positive");
  const auto& f = g.factors();
  std::size_t axis = f.size();
  if (r == 1) axis = 0;
  else
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] % r == 0) {
        axis = i;
        break;
      }
  if (axis == f.size())
    throw PreconditionError("coset_partition: no index-" + std::to_string(r) + " subgroup realizable by coordinate projection in " +
                            g.to_string());
  std::vector<GroupSubset> cosets(static_cast<std::size_t>(r), GroupSubset(g));
  for (int i = 0; i < g.order(); ++i) cosets[static_cast<std::size_t>(g.elem(i).coords[axis] % r)].insert(i);
  return cosets;
}

Count f_group(const AbelianGroup& g, int workers, int size_limit) {
  if (g.order() > size_limit || g.order() > 64) throw LimitExceeded("f_group: |G| exceeds limit");
  return count_independent(SchurHypergraph::group(g), workers);
}

Count f_max_group(const AbelianGroup& g, int workers, int size_limit) {
  if (g.order() > size_limit || g.order() > 64) throw LimitExceeded("f_max_group: |G| exceeds limit");
  return maximal_independent_sets(SchurHypergraph::group(g), EngineOptions{workers}).size();
}

}  // namespace sumfree
