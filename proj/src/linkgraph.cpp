#include "sumfree/linkgraph.hpp"

#include <algorithm>
#include <cstdlib>

namespace sumfree {

Graph link_graph(const IntSubset& s, const IntSubset& b) {
  const auto sm = s.members();
  const auto bm = b.members();
  Graph g(std::vector<std::int64_t>(bm.begin(), bm.end()));
  auto index_of = [&](int x) -> int {
    auto it = std::lower_bound(bm.begin(), bm.end(), x);
    return (it != bm.end() && *it == x) ? static_cast<int>(it - bm.begin()) : -1;
  };
  for (std::size_t i = 0; i < bm.size(); ++i) {
    const int x = bm[i];
    const int vi = static_cast<int>(i);
    for (int z : sm) {
      // x + z = y, y - z = x, x + y = z, z - y = x
      for (int y : {x + z, x - z, z - x}) {
        if (y == x) continue;
        if (const int vy = index_of(y); vy >= 0) g.add_edge(vi, vy);
      }
      if (2 * x == z) g.add_edge(vi, vi);
    }
    for (int z : sm)
      for (int z2 : sm)
        if (z + z2 == x || x + z == z2) g.add_edge(vi, vi);
  }
  return g;
}

Graph link_graph(const GroupSubset& s, const GroupSubset& b) {
  if (!(s.group() == b.group())) throw PreconditionError("link_graph: S and B live in different groups");
  const auto& grp = s.group();
  const auto sm = s.members();
  const auto bm = b.members();
  Graph g(std::vector<std::int64_t>(bm.begin(), bm.end()));
  std::vector<int> pos(static_cast<std::size_t>(grp.order()), -1);
  for (std::size_t i = 0; i < bm.size(); ++i) pos[static_cast<std::size_t>(bm[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < bm.size(); ++i) {
    const int x = bm[i];
    const int vi = static_cast<int>(i);
    for (int z : sm) {
      // x + z = y, y + z = x, x + y = z
      for (int y : {grp.add(x, z), grp.add(x, grp.neg(z)), grp.add(z, grp.neg(x))}) {
        if (y == x) continue;
        if (const int vy = pos[static_cast<std::size_t>(y)]; vy >= 0) g.add_edge(vi, vy);
      }
      // {x, x, z}: x + x = z or x + z = x
      if (grp.add(x, x) == z || grp.add(x, z) == x) g.add_edge(vi, vi);
    }
    for (int z : sm)
      for (int z2 : sm)
        if (grp.add(z, z2) == x || grp.add(x, z) == z2) g.add_edge(vi, vi);
  }
  return g;
}

Graph link_family(const LinkFamilySpec& fam) {
  if (fam.n < 2) throw PreconditionError("link_family: n must be at least 2");
  const int half = fam.n / 2;
  if (fam.m < 1 || fam.m > half) throw PreconditionError("link_family: need 1 <= m <= n/2");
  const GroundSet ground(fam.n);
  IntSubset s(ground);
  for (int x : fam.s) {
    if (x < 1 || x > half) throw PreconditionError("link_family: S must lie in [n/2]");
    s.insert(x);
  }
  s.insert(fam.m);
  return link_graph(s, IntSubset::interval(ground, half + 1, fam.n));
}

namespace {

void check_even(int n, int x) {
  if (x < 2 || x > n || x % 2 != 0) throw PreconditionError("expected an even member of [n], got " + std::to_string(x));
}

}  // namespace

Graph link_single_even(int n, int x) {
  check_even(n, x);
  const GroundSet ground(n);
  return link_graph(IntSubset(ground, {x}), IntSubset::odds(ground));
}

Graph link_pair_even(int n, int x, int x2) {
  check_even(n, x);
  check_even(n, x2);
  if (x == x2) throw PreconditionError("link_pair_even needs distinct even elements");
  const GroundSet ground(n);
  return link_graph(IntSubset(ground, {x, x2}), IntSubset::odds(ground));
}

ShiftIsoInstance shift_iso_instance(const ShiftIsoParams& p) {
  const int w = p.window;
  if (p.n % 4 != 0 || p.n < 8) throw PreconditionError("shift isomorphism needs 4 | n");
  if (w < 1) throw PreconditionError("shift isomorphism needs window >= 1");
  if (std::abs(p.t) > w) throw PreconditionError("shift isomorphism needs |t| <= window");
  if (p.ell < 0) throw PreconditionError("shift isomorphism needs ell >= 0");
  for (int x : p.s0)
    if (x < 1 || x > w) throw PreconditionError("shift isomorphism needs S0 within [window]");
  const int q = p.n / 4;
  if (q + p.t < 8 * w) throw PreconditionError("shift isomorphism intervals overlap: need n/4 + t >= 8 * window");

  ShiftIsoInstance inst;
  inst.n_prime = p.n + 4 * p.ell;
  inst.m = q - p.t;
  inst.m_prime = inst.n_prime / 4 - p.t;
  for (int x : p.s0) {
    inst.s.push_back(p.n / 2 - x);
    inst.s_prime.push_back(inst.n_prime / 2 - x);
  }
  std::sort(inst.s.begin(), inst.s.end());
  std::sort(inst.s_prime.begin(), inst.s_prime.end());

  const Graph base = link_family({p.n, inst.m, inst.s});
  inst.small = disjoint_union(base, matching(p.ell));
  inst.large = link_family({inst.n_prime, inst.m_prime, inst.s_prime});

  const int k4 = 4 * w;
  const int h = p.n / 2, qq = 3 * p.n / 4;
  const int h2 = inst.n_prime / 2, qq2 = 3 * inst.n_prime / 4;
  auto image = [&](int x) -> int {
    if (x <= h + k4) return x + 2 * p.ell;
    if (x <= qq + k4 - p.t) return x + 3 * p.ell;
    return x + 4 * p.ell;
  };
  inst.map.assign(static_cast<std::size_t>(inst.small.size()), -1);
  for (int v = 0; v < base.size(); ++v)
    inst.map[static_cast<std::size_t>(v)] = inst.large.find_label(image(static_cast<int>(base.label(v))));
  for (int j = 1; j <= p.ell; ++j) {
    const int v = base.size() + 2 * (j - 1);
    inst.map[static_cast<std::size_t>(v)] = inst.large.find_label(h2 + k4 + j);
    inst.map[static_cast<std::size_t>(v + 1)] = inst.large.find_label(qq2 + k4 + j - p.t);
  }
  return inst;
}

}  // namespace sumfree
