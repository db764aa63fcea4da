#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumfree/abelian.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/setcore.hpp"

namespace sumfree {

/// A family of sum-free sets whose members extend to pairwise distinct
/// maximal sum-free sets. Members are sorted element lists for [n] and
/// sorted flat indices for a group.
struct Family {
  std::string name;
  std::string ground;                  ///< "[n]" or a group descriptor
  int n = 0;                           ///< ground size
  std::optional<AbelianGroup> group;
  std::vector<std::vector<int>> members;
  std::vector<int> window;             ///< no member can be extended inside it
  Count claimed_size = 0;
};

/// m = n or n - 1 (even), together with one of x, m - x for each odd x < m/2.
Family ce_odd_family(int n);
/// n/4 plus S' in I_2 = [3n/4+1, n] plus x - n/4 for x in I_2 \ S'. Needs 4 | n.
Family interval_family(int n);
/// Z_2^k: x = (0,1,0,...), one endpoint of each edge of L_x[U] with U the
/// elements whose first coordinate is 1.
Family z2k_family(int k);
/// {x} + I over I in MIS(L_x[1+H]), H of index 3 and x the first element of
/// 2+H. Needs |G| odd and divisible by 3.
Family index3_family(const AbelianGroup& g);
/// {x} + I over I in MIS(L_x[(2+H) u (3+H)]), H of index 7 and x the first
/// element of 1+H. Needs exponent 7.
Family exponent7_family(const AbelianGroup& g);

/// Gamma = L_{k, -2k}[M] in Z_n, n = 9k + i, M = [3k+1, 6k].
Graph zn_prism_graph(int n);

struct PrismCensus {
  int n = 0;
  int k = 0;
  int window_size = 0;             ///< |M|
  int components = 0;
  int prisms = 0;                  ///< components isomorphic to K_3 x K_2
  std::vector<int> other_sizes;    ///< vertex counts of the remaining components
  Count mis = 0;
};
PrismCensus zn_prism_census(int n);

struct FamilyCheck {
  bool sum_free = true;
  bool distinct = true;
  bool size_matches = true;
  bool window_certified = true;
  std::optional<bool> closures_distinct;  ///< only computed on small grounds
  std::vector<std::string> failures;
  bool ok() const {
    return sum_free && distinct && size_matches && window_certified && closures_distinct.value_or(true);
  }
};

/// Checks every member. The exhaustive closure comparison runs when the
/// ground has at most `closure_limit` elements ([n]) or `group_closure_limit`
/// elements (groups).
FamilyCheck verify_family(const Family& f, int workers = 1, int closure_limit = 18, int group_closure_limit = 28);

}  // namespace sumfree
