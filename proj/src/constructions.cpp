#include "sumfree/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "sumfree/linkgraph.hpp"
#include "sumfree/miscount.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/schur_engine.hpp"

namespace sumfree {
namespace {

Count pow2(int e) {
  if (e < 0 || e > 63) throw LimitExceeded("2^" + std::to_string(e) + " out of range");
  return Count{1} << e;
}

// All ways of taking one vertex label from each pair, added to `base`.
std::vector<std::vector<int>> one_per_pair(const std::vector<int>& base, const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() > 30) throw LimitExceeded("family too large to list");
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<int> s = base;
    for (std::size_t i = 0; i < pairs.size(); ++i) s.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Family group_link_family(std::string name, const AbelianGroup& g, int x, const GroupSubset& window) {
  Family f;
  f.name = std::move(name);
  f.ground = g.to_string();
  f.n = g.order();
  f.group = g;
  f.window = window.members();
  const Graph gamma = link_graph(GroupSubset(g, {x}), window);
  f.claimed_size = count_mis(gamma);
  for (const auto& ind : enumerate_mis(gamma)) {
    std::vector<int> s{x};
    for (int v : ind) s.push_back(static_cast<int>(gamma.label(v)));
    std::sort(s.begin(), s.end());
    f.members.push_back(std::move(s));
  }
  std::sort(f.members.begin(), f.members.end());
  return f;
}

bool member_sum_free(const Family& f, const std::vector<int>& s) {
  if (f.group) return is_sum_free_group(GroupSubset(*f.group, s));
  return is_sum_free(IntSubset(GroundSet{f.n}, s));
}

}  // namespace

Family ce_odd_family(int n) {
  if (n < 4) throw PreconditionError("ce_odd_family: n must be at least 4");
  const int m = n % 2 == 0 ? n : n - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 1; 2 * x < m; x += 2) pairs.emplace_back(x, m - x);
  Family f;
  f.name = "ce_odd";
  f.ground = "[" + std::to_string(n) + "]";
  f.n = n;
  for (int o = 1; o < m; o += 2) f.window.push_back(o);
  f.claimed_size = pow2(static_cast<int>(pairs.size()));
  f.members = one_per_pair({m}, pairs);
  return f;
}

Family interval_family(int n) {
  if (n < 4 || n % 4 != 0) throw PreconditionError("interval_family: n must be a positive multiple of 4");
  const int q = n / 4;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 3 * q + 1; x <= n; ++x) pairs.emplace_back(x - q, x);
  Family f;
  f.name = "interval";
  f.ground = "[" + std::to_string(n) + "]";
  f.n = n;
  for (int x = 3 * q + 1; x <= n; ++x) f.window.push_back(x);
  f.claimed_size = pow2(q);
  f.members = one_per_pair({q}, pairs);
  return f;
}

Family z2k_family(int k) {
  if (k < 2) throw PreconditionError("z2k_family: k must be at least 2");
  if (k > 10) throw LimitExceeded("z2k_family: k must be at most 10");
  const AbelianGroup g(std::vector<int>(static_cast<std::size_t>(k), 2));
  GroupElem x = g.zero();
  x.coords[1] = 1;
  GroupSubset u(g);
  for (int i = 0; i < g.order(); ++i)
    if (g.elem(i).coords[0] == 1) u.insert(i);
  const int xi = g.index(x);
  const Graph gamma = link_graph(GroupSubset(g, {xi}), u);
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : gamma.edges()) pairs.emplace_back(static_cast<int>(gamma.label(a)), static_cast<int>(gamma.label(b)));
  if (gamma.loop_count() != 0 || 2 * static_cast<int>(pairs.size()) != gamma.size())
    throw Error("z2k_family: link graph is not a perfect matching");
  Family f;
  f.name = "z2k";
  f.ground = g.to_string();
  f.n = g.order();
  f.group = g;
  f.window = u.members();
  f.claimed_size = pow2(g.order() / 4);
  f.members = one_per_pair({xi}, pairs);
  return f;
}

Family index3_family(const AbelianGroup& g) {
  if (g.order() % 2 == 0 || g.order() % 3 != 0)
    throw PreconditionError("index3_family: |G| must be odd and divisible by 3");
  const auto cosets = coset_partition(g, 3);
  return group_link_family("index3", g, cosets[2].members().front(), cosets[1]);
}

Family exponent7_family(const AbelianGroup& g) {
  if (g.exponent() != 7) throw PreconditionError("exponent7_family: G must have exponent 7");
  const auto cosets = coset_partition(g, 7);
  GroupSubset window(g);
  for (int v : cosets[2].members()) window.insert(v);
  for (int v : cosets[3].members()) window.insert(v);
  return group_link_family("exponent7", g, cosets[1].members().front(), window);
}

Graph zn_prism_graph(int n) {
  const int k = n / 9;
  if (k < 1) throw PreconditionError("zn_prism_graph: need n >= 9");
  const AbelianGroup g({n});
  GroupSubset s(g, {k, n - 2 * k});
  GroupSubset m(g);
  for (int x = 3 * k + 1; x <= 6 * k; ++x) m.insert(x);
  return link_graph(s, m);
}

PrismCensus zn_prism_census(int n) {
  PrismCensus c;
  c.n = n;
  c.k = n / 9;
  const Graph gamma = zn_prism_graph(n);
  c.window_size = gamma.size();
  const Graph prism = cartesian_product(complete(3), path(2));
  for (const auto& comp : connected_components(gamma)) {
    ++c.components;
    const Graph h = induced_subgraph(gamma, comp);
    if (h.size() == 6 && are_isomorphic(h, prism))
      ++c.prisms;
    else
      c.other_sizes.push_back(h.size());
  }
  c.mis = count_mis(gamma);
  return c;
}

FamilyCheck verify_family(const Family& f, int workers, int closure_limit, int group_closure_limit) {
  FamilyCheck r;
  std::mutex mu;
  auto fail = [&](std::string w) {
    std::lock_guard lock(mu);
    r.failures.push_back(std::move(w));
  };
  auto show = [](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };

  if (f.members.size() != f.claimed_size) {
    r.size_matches = false;
    fail("size " + std::to_string(f.members.size()) + " != claimed " + std::to_string(f.claimed_size));
  }
  auto sorted = f.members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.distinct = false;
    fail("repeated member");
  }

  std::atomic<bool> sf{true}, cert{true};
  parallel_for(f.members.size(), workers, [&](std::size_t i) {
    const auto& s = f.members[i];
    if (!member_sum_free(f, s)) {
      sf = false;
      fail("not sum-free: " + show(s));
      return;
    }
    for (int w : f.window) {
      if (std::binary_search(s.begin(), s.end(), w)) continue;
      auto t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), w), w);
      if (member_sum_free(f, t)) {
        cert = false;
        fail("extendable in window: " + show(s) + " + " + std::to_string(w));
      }
    }
  });
  r.sum_free = sf;
  r.window_certified = cert;

  const bool small = f.group ? f.n <= group_closure_limit : f.n <= closure_limit;
  if (small && f.n <= 64) {
    const auto h = f.group ? SchurHypergraph::group(*f.group) : SchurHypergraph::interval(f.n);
    const int shift = f.group ? 0 : 1;
    std::vector<std::uint64_t> member_masks;
    for (const auto& s : f.members) {
      std::uint64_t m = 0;
      for (int v : s) m |= std::uint64_t{1} << (v - shift);
      member_masks.push_back(m);
    }
    std::vector<int> hits(member_masks.size(), 0);
    bool ok = true;
    for (auto mx : maximal_independent_sets(h, {workers})) {
      int inside = 0;
      for (std::size_t i = 0; i < member_masks.size(); ++i)
        if ((member_masks[i] & ~mx) == 0) {
          ++inside;
          ++hits[i];
        }
      if (inside > 1) ok = false;
    }
    if (std::find(hits.begin(), hits.end(), 0) != hits.end()) ok = false;
    r.closures_distinct = ok;
    if (!ok) fail("two members share a maximal closure");
  }
  return r;
}

}  // namespace sumfree
