#include "sumfree/miscount.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

namespace sumfree {
namespace {

struct VSet {
  std::uint64_t w[2] = {0, 0};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
  bool none() const { return (w[0] | w[1]) == 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  int first() const { return w[0] ? std::countr_zero(w[0]) : 64 + std::countr_zero(w[1]); }
  VSet operator&(const VSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  VSet operator|(const VSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  VSet minus(const VSet& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

  template <class Fn>
  void each(Fn&& fn) const {
    for (int k = 0; k < 2; ++k)
      for (auto m = w[k]; m; m &= m - 1) fn(64 * k + std::countr_zero(m));
  }
};

// The loop-free part of a graph as bitmask adjacency.
struct Bitgraph {
  std::vector<int> original;  // index in the input graph
  std::vector<VSet> nbr;
  std::vector<VSet> closed;

  Bitgraph(const Graph& g, int limit) {
    for (int v = 0; v < g.size(); ++v)
      if (!g.has_loop(v)) original.push_back(v);
    const int m = static_cast<int>(original.size());
    if (m > std::min(limit, 128))
      throw LimitExceeded("count_mis: " + std::to_string(m) + " loop-free vertices exceeds limit " +
                          std::to_string(std::min(limit, 128)));
    std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(original[static_cast<std::size_t>(i)])] = i;
    nbr.resize(static_cast<std::size_t>(m));
    closed.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int u : g.neighbors(original[static_cast<std::size_t>(i)])) {
        const int j = pos[static_cast<std::size_t>(u)];
        if (j >= 0) nbr[static_cast<std::size_t>(i)].set(j);
      }
      closed[static_cast<std::size_t>(i)] = nbr[static_cast<std::size_t>(i)];
      closed[static_cast<std::size_t>(i)].set(i);
    }
  }

  int size() const { return static_cast<int>(original.size()); }
  const VSet& n(int v) const { return nbr[static_cast<std::size_t>(v)]; }
  const VSet& c(int v) const { return closed[static_cast<std::size_t>(v)]; }

  VSet all() const {
    VSet s;
    for (int v = 0; v < size(); ++v) s.set(v);
    return s;
  }

  // Some excluded vertex can no longer be dominated.
  bool dead(const VSet& p, const VSet& x) const {
    bool bad = false;
    x.each([&](int v) {
      if (!bad && (n(v) & p).none()) bad = true;
    });
    return bad;
  }

  // Pivot: vertex of P u X minimising the branching set P n N[u].
  VSet branch_set(const VSet& p, const VSet& x) const {
    VSet best;
    int best_size = 1 << 30;
    (p | x).each([&](int u) {
      if (best_size <= 1) return;
      const VSet b = c(u) & p;
      const int s = b.count();
      if (s < best_size) {
        best_size = s;
        best = b;
      }
    });
    return best;
  }

  // Component of P u X containing `start`, ignoring edges inside X.
  VSet component(int start, const VSet& p, const VSet& x) const {
    const VSet live = p | x;
    VSet seen;
    seen.set(start);
    VSet frontier = seen;
    while (!frontier.none()) {
      VSet next;
      frontier.each([&](int v) {
        next = next | (n(v) & (p.test(v) ? live : p));
      });
      frontier = next.minus(seen);
      seen = seen | frontier;
    }
    return seen;
  }

  struct StateHash {
    std::size_t operator()(const std::array<std::uint64_t, 4>& k) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (auto w : k) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
      return static_cast<std::size_t>(h);
    }
  };
  static constexpr std::size_t kMemoLimit = 1 << 22;
  mutable std::unordered_map<std::array<std::uint64_t, 4>, Count, StateHash> memo;

  Count count(VSet p, VSet x) const {
    if (p.none()) return x.none() ? 1 : 0;
    if (dead(p, x)) return 0;
    const std::array<std::uint64_t, 4> key{p.w[0], p.w[1], x.w[0], x.w[1]};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Count r = count_uncached(p, x);
    if (memo.size() < kMemoLimit) memo.emplace(key, r);
    return r;
  }

  Count count_uncached(VSet p, VSet x) const {
    const VSet live = p | x;
    const VSet first = component(live.first(), p, x);
    if (first.count() != live.count()) {
      const Count a = count(p & first, x & first);
      if (a == 0) return 0;
      return checked_mul(a, count(p.minus(first), x.minus(first)));
    }
    Count total = 0;
    branch_set(p, x).each([&](int v) {
      total = checked_add(total, count(p.minus(c(v)), x.minus(n(v))));
      p.reset(v);
      x.set(v);
    });
    return total;
  }

  void enumerate(VSet p, VSet x, std::vector<int>& chosen, std::vector<std::vector<int>>& out,
                 std::size_t cap) const {
    if (p.none()) {
      if (x.none()) {
        if (out.size() >= cap)
          throw LimitExceeded("enumerate_mis: more than " + std::to_string(cap) + " sets");
        out.push_back(chosen);
      }
      return;
    }
    if (dead(p, x)) return;
    branch_set(p, x).each([&](int v) {
      chosen.push_back(v);
      enumerate(p.minus(c(v)), x.minus(n(v)), chosen, out, cap);
      chosen.pop_back();
      p.reset(v);
      x.set(v);
    });
  }
};

double log2_binomial(int n, int k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
}

double log2_sum(const std::vector<double>& terms) {
  if (terms.empty()) return -INFINITY;
  const double top = *std::max_element(terms.begin(), terms.end());
  double s = 0;
  for (double t : terms) s += std::exp2(t - top);
  return top + std::log2(s);
}

// Greedy: repeatedly remove the vertex lying on the most triangles.
std::vector<int> triangle_hitting_set(const Graph& g) {
  std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> hit;
  for (;;) {
    std::vector<int> on(static_cast<std::size_t>(g.size()), 0);
    bool any = false;
    for (auto [u, v] : g.edges()) {
      if (removed[static_cast<std::size_t>(u)] || removed[static_cast<std::size_t>(v)]) continue;
      for (int w : g.neighbors(v)) {
        if (w <= v || removed[static_cast<std::size_t>(w)] || !g.has_edge(u, w)) continue;
        ++on[static_cast<std::size_t>(u)];
        ++on[static_cast<std::size_t>(v)];
        ++on[static_cast<std::size_t>(w)];
        any = true;
      }
    }
    if (!any) return hit;
    const auto best = static_cast<int>(std::max_element(on.begin(), on.end()) - on.begin());
    removed[static_cast<std::size_t>(best)] = 1;
    hit.push_back(best);
  }
}

}  // namespace

Graph strip_loops(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.size(); ++v)
    if (!g.has_loop(v)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Count count_mis(const Graph& g, const MisOptions& opts) {
  const Bitgraph b(g, opts.vertex_limit);
  return b.count(b.all(), VSet{});
}

std::vector<std::vector<int>> enumerate_mis(const Graph& g, const MisOptions& opts) {
  const Bitgraph b(g, opts.vertex_limit);
  std::vector<std::vector<int>> found;
  std::vector<int> chosen;
  b.enumerate(b.all(), VSet{}, chosen, found, opts.enum_cap);
  for (auto& s : found) {
    for (int& v : s) v = b.original[static_cast<std::size_t>(v)];
    std::sort(s.begin(), s.end(), [&](int a, int c) { return g.label(a) < g.label(c) || (g.label(a) == g.label(c) && a < c); });
  }
  auto key = [&](const std::vector<int>& s) {
    std::vector<std::int64_t> k;
    k.reserve(s.size());
    for (int v : s) k.push_back(g.label(v));
    return k;
  };
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& c) {
    const auto ka = key(a), kc = key(c);
    return ka != kc ? ka < kc : a < c;
  });
  return found;
}

MisResult solve_mis(const Graph& g, bool with_sets, const MisOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  MisResult r;
  if (with_sets) {
    r.sets = enumerate_mis(g, opts);
    r.count = r.sets->size();
  } else {
    r.count = count_mis(g, opts);
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

Count mis_cycle(int m) {
  if (m < 3) throw PreconditionError("mis_cycle: m must be at least 3");
  std::vector<Count> v{0, 0, 0, count_mis(cycle(3)), count_mis(cycle(4)), count_mis(cycle(5))};
  for (int i = 6; i <= m; ++i)
    v.push_back(checked_add(v[static_cast<std::size_t>(i - 2)], v[static_cast<std::size_t>(i - 3)]));
  return v[static_cast<std::size_t>(m)];
}

bool within_log2_bound(Count count, double bound_log2) {
  if (count == 0) return true;
  return std::log2(static_cast<double>(count)) <= bound_log2 + 1e-9 * std::max(1.0, std::fabs(bound_log2));
}

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

// Every bound is evaluated on the loop-free graph G0 and compared with
// MIS(G0); the loop fact then carries it over to G.
BoundReport bound_certificates(const Graph& g, const MisOptions& opts) {
  BoundReport rep;
  rep.exact = count_mis(g, opts);
  const Graph g0 = remove_loops(g);
  const Count exact0 = count_mis(g0, opts);
  const int n = g0.size();
  const DegreeStats ds = degree_stats(g0);
  const bool tri_free = is_triangle_free(g0);

  auto add = [&](std::string name, bool applicable, double log2_value, std::string detail = {}) {
    BoundCheck c;
    c.name = std::move(name);
    c.applicable = applicable;
    c.bound_log2 = log2_value;
    c.exact = exact0;
    c.holds = !applicable || within_log2_bound(exact0, log2_value);
    c.detail = std::move(detail);
    rep.checks.push_back(std::move(c));
  };

  add("moon_moser", true, n / 3.0 * std::log2(3.0));
  add("hujter_tuza", tri_free, n / 2.0);

  {
    const int d = std::max(ds.max_degree, 1);
    const double k = ds.edges - n / 2.0;
    add("dense", tri_free, n / 2.0 - k / (100.0 * d * d),
        "D=" + std::to_string(d) + " k=" + std::to_string(k));
  }
  {
    const auto t = triangle_hitting_set(g0);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (std::find(t.begin(), t.end(), v) == t.end()) rest.push_back(v);
    const Graph gp = induced_subgraph(g0, rest);
    const int np = gp.size();
    const int d = std::max(ds.max_degree, 1);
    const double k = gp.edge_count() - np / 2.0;
    add("almost_triangle_free", true,
        np / 2.0 - k / (100.0 * d * d) + 101.0 * static_cast<double>(t.size()) / 100.0,
        "|T|=" + std::to_string(t.size()));
  }
  {
    const bool ok = ds.min_degree >= 1;
    double value = 0;
    std::string detail;
    if (ok) {
      const double k = std::max(1.0, static_cast<double>(ds.max_degree) / ds.min_degree);
      const double b = std::sqrt(static_cast<double>(ds.min_degree));
      const int top = static_cast<int>(std::floor(n / b + 1e-12));
      std::vector<double> terms;
      for (int i = 0; i <= std::min(top, n); ++i) terms.push_back(log2_binomial(n, i));
      value = log2_sum(terms) + ((k / (k + 1)) * n / 3.0 + 2.0 * n / (3.0 * b)) * std::log2(3.0);
      detail = "k=" + std::to_string(k) + " b=" + std::to_string(b);
    }
    add("almost_regular", ok, value, detail);
  }
  {
    const int k = disjoint_p3_packing(g0);
    add("disjoint_p3", tri_free, n / 2.0 - k / 25.0, "k=" + std::to_string(k));
  }
  {
    BoundCheck c;
    c.name = "loop_monotone";
    c.applicable = true;
    c.bound_log2 = exact0 ? std::log2(static_cast<double>(exact0)) : -INFINITY;
    c.exact = rep.exact;
    c.holds = rep.exact <= exact0;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace sumfree
