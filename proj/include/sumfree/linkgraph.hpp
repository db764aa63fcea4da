#pragma once

#include <vector>

#include "sumfree/abelian.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/setcore.hpp"

namespace sumfree {

/// The link graph L_S[B]: vertex set B (labels are the elements, in
/// increasing order). x != y are adjacent when {x, y, z} is a Schur triple
/// for some z in S (z may equal x or y); x carries a loop when 2x in S, or
/// z + z' = x, or x + z = z' for some z, z' in S.
Graph link_graph(const IntSubset& s, const IntSubset& b);
/// Group version; labels are flat element indices, and "Schur triple" means
/// some ordering satisfies a + b = c in G.
Graph link_graph(const GroupSubset& s, const GroupSubset& b);

/// L(n, m, S): link graph of S + {m} on [floor(n/2)+1, n].
struct LinkFamilySpec {
  int n;
  int m;
  std::vector<int> s;
};
Graph link_family(const LinkFamilySpec& fam);

/// L_x[O] and L_{x,x'}[O] on the odd members of [n].
Graph link_single_even(int n, int x);
Graph link_pair_even(int n, int x, int x2);

/// Scaled form of the shift isomorphism between L(n, m, S) and
/// L(n + 4l, m', S'): m = n/4 - t, m' = n'/4 - t, S = n/2 - S0, S' = n'/2 - S0,
/// with S0 in [1, window], |t| <= window, and the interval breakpoints at
/// distance 4*window from n/2 and n.
struct ShiftIsoParams {
  int n;
  int t;
  int window;
  std::vector<int> s0;
  int ell;
};

struct ShiftIsoInstance {
  int n_prime;
  int m;
  int m_prime;
  std::vector<int> s;
  std::vector<int> s_prime;
  Graph small;          ///< L(n, m, S) disjoint-union a matching of size ell
  Graph large;          ///< L(n', m', S')
  std::vector<int> map; ///< vertex of `small` -> vertex of `large`
};

/// Throws PreconditionError when the four intervals of the map would
/// overlap (n/4 < 8*window + |t|) or the parameters are out of range.
ShiftIsoInstance shift_iso_instance(const ShiftIsoParams& p);

}  // namespace sumfree
