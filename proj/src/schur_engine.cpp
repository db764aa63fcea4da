#include "sumfree/schur_engine.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "sumfree/abelian.hpp"
#include "sumfree/parallel.hpp"

namespace sumfree {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

}  // namespace

SchurHypergraph::SchurHypergraph(int size) : size_(size), partners_(static_cast<std::size_t>(size)) {
  if (size < 1 || size > 64) throw LimitExceeded("Schur hypergraph needs 1..64 elements");
}

void SchurHypergraph::add_edge(std::uint64_t edge) {
  for (auto rest = edge; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    partners_[static_cast<std::size_t>(v)].push_back(edge & ~bit(v));
  }
}

void SchurHypergraph::finalize() {
  for (auto& ps : partners_) {
    std::sort(ps.begin(), ps.end(), [](auto a, auto b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<std::uint64_t> minimal;
    for (auto p : ps)
      if (std::none_of(minimal.begin(), minimal.end(), [p](auto q) { return (q & ~p) == 0; }))
        minimal.push_back(p);
    ps = std::move(minimal);
  }
}

SchurHypergraph SchurHypergraph::interval(int n) {
  SchurHypergraph h(n);
  for (int x = 1; x <= n; ++x)
    for (int y = x; x + y <= n; ++y) h.add_edge(bit(x - 1) | bit(y - 1) | bit(x + y - 1));
  h.finalize();
  return h;
}

SchurHypergraph SchurHypergraph::group(const AbelianGroup& g) {
  SchurHypergraph h(g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = a; b < g.order(); ++b) h.add_edge(bit(a) | bit(b) | bit(g.add(a, b)));
  h.finalize();
  return h;
}

bool SchurHypergraph::is_independent(std::uint64_t set) const {
  for (auto rest = set; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (!can_add(v, set & ~bit(v))) return false;
  }
  return true;
}

bool SchurHypergraph::is_maximal(std::uint64_t set) const {
  if (!is_independent(set)) return false;
  for (auto rest = full_mask(size_) & ~set; rest; rest &= rest - 1)
    if (can_add(std::countr_zero(rest), set)) return false;
  return true;
}

bool canonical_mask_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int low = std::countr_zero(a ^ b);
  if (a & bit(low)) return (b >> low) != 0;
  return (a >> low) == 0;
}

namespace {

// Search state: elements [0, next) are decided; `chosen` is the sum-free
// prefix choice, `excluded` the rejected elements still awaiting a blocker.
struct State {
  int next;
  std::uint64_t chosen;
  std::uint64_t excluded;
};

class MaximalSearch {
 public:
  MaximalSearch(const SchurHypergraph& h, std::size_t cap) : h_(h), n_(h.size()), cap_(cap) {}

  // Children of a state in canonical order (include before exclude).
  // Returns false if the state is dead.
  bool viable(const State& s) const {
    if (s.excluded == 0) return true;
    // Elements still addable among the undecided ones.
    std::uint64_t open = 0;
    for (auto rest = full_mask(n_) & ~(s.next >= 64 ? ~std::uint64_t{0} : bit(s.next) - 1); rest;
         rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (h_.can_add(v, s.chosen)) open |= bit(v);
    }
    const auto reach = s.chosen | open;
    for (auto rest = s.excluded; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      bool ok = false;
      for (auto p : h_.partners(x))
        if ((p & ~reach) == 0) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }

  // Drops excluded elements that already have a blocker inside `chosen`.
  std::uint64_t settle(std::uint64_t chosen, std::uint64_t excluded) const {
    for (auto rest = excluded; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if (!h_.can_add(x, chosen)) excluded &= ~bit(x);
    }
    return excluded;
  }

  void children(const State& s, std::vector<State>& out) const {
    const int v = s.next;
    if (h_.can_add(v, s.chosen)) {
      const auto chosen = s.chosen | bit(v);
      State c{v + 1, chosen, settle(chosen, s.excluded)};
      if (viable(c)) out.push_back(c);
      State d{v + 1, s.chosen, s.excluded | bit(v)};
      if (viable(d)) out.push_back(d);
    } else {
      // v is already blocked by the chosen set.
      State d{v + 1, s.chosen, s.excluded};
      out.push_back(d);
    }
  }

  void run(const State& s, std::vector<std::uint64_t>& out) const {
    if (s.next == n_) {
      if (s.excluded == 0) {
        out.push_back(s.chosen);
        if (out.size() > cap_) throw LimitExceeded("maximal sum-free enumeration cap exceeded");
      }
      return;
    }
    std::vector<State> kids;
    kids.reserve(2);
    children(s, kids);
    for (const auto& k : kids) run(k, out);
  }

 private:
  const SchurHypergraph& h_;
  int n_;
  std::size_t cap_;
};

Count count_from(const SchurHypergraph& h, int next, std::uint64_t chosen) {
  const int n = h.size();
  // Skip forced exclusions.
  while (next < n && !h.can_add(next, chosen)) ++next;
  if (next == n) return 1;
  return count_from(h, next + 1, chosen | bit(next)) + count_from(h, next + 1, chosen);
}

template <class Expand>
std::vector<State> frontier(State root, int workers, int n, Expand&& expand) {
  std::vector<State> level{root};
  const std::size_t target = workers <= 1 ? 1 : static_cast<std::size_t>(workers) * 64;
  while (level.size() < target) {
    std::vector<State> next;
    bool progressed = false;
    for (const auto& s : level) {
      if (s.next >= n) {
        next.push_back(s);
        continue;
      }
      expand(s, next);
      progressed = true;
    }
    level = std::move(next);
    if (!progressed || level.empty()) break;
  }
  return level;
}

}  // namespace

Count count_independent(const SchurHypergraph& h, int workers) {
  auto roots = frontier(State{0, 0, 0}, workers, h.size(), [&](const State& s, std::vector<State>& out) {
    if (h.can_add(s.next, s.chosen)) out.push_back(State{s.next + 1, s.chosen | bit(s.next), 0});
    out.push_back(State{s.next + 1, s.chosen, 0});
  });
  std::vector<Count> partial(roots.size(), 0);
  parallel_for(roots.size(), workers, [&](std::size_t i) { partial[i] = count_from(h, roots[i].next, roots[i].chosen); });
  Count total = 0;
  for (auto c : partial) total = checked_add(total, c);
  return total;
}

std::vector<std::uint64_t> maximal_independent_sets(const SchurHypergraph& h, const EngineOptions& opts) {
  MaximalSearch search(h, opts.cap);
  auto roots = frontier(State{0, 0, 0}, opts.workers, h.size(),
                        [&](const State& s, std::vector<State>& out) { search.children(s, out); });
  std::vector<std::vector<std::uint64_t>> partial(roots.size());
  parallel_for(roots.size(), opts.workers, [&](std::size_t i) { search.run(roots[i], partial[i]); });
  std::vector<std::uint64_t> all;
  for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
  if (all.size() > opts.cap) throw LimitExceeded("maximal sum-free enumeration cap exceeded");
  std::sort(all.begin(), all.end(), canonical_mask_less);
  return all;
}

}  // namespace sumfree
