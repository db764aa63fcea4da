#pragma once

#include <chrono>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/graph.hpp"

namespace sumfree {

/// G minus every vertex that carries a loop.
Graph strip_loops(const Graph& g);

struct MisOptions {
  /// Maximum number of vertices after loop stripping (hard ceiling 128).
  int vertex_limit = 80;
  /// Maximum number of sets enumerate_mis will materialise.
  std::size_t enum_cap = 1'000'000;
};

/// Number of maximal independent sets. Loop vertices never belong to an
/// independent set and never need to be dominated.
Count count_mis(const Graph& g, const MisOptions& opts = {});

/// All maximal independent sets as sorted vertex-index lists of g, ordered
/// lexicographically by their sorted label sequences.
std::vector<std::vector<int>> enumerate_mis(const Graph& g, const MisOptions& opts = {});

struct MisResult {
  Count count = 0;
  std::optional<std::vector<std::vector<int>>> sets;
  std::chrono::nanoseconds elapsed{0};
};
MisResult solve_mis(const Graph& g, bool with_sets, const MisOptions& opts = {});

/// MIS(C_m) from MIS(C_m) = MIS(C_{m-2}) + MIS(C_{m-3}), seeded with exact
/// counts of C_3, C_4, C_5.
Count mis_cycle(int m);

/// One upper bound on MIS(G) evaluated against the exact count.
struct BoundCheck {
  std::string name;
  bool applicable = false;  ///< hypotheses hold
  double bound_log2 = 0;    ///< log2 of the bound value
  Count exact = 0;
  bool holds = true;        ///< vacuously true when not applicable
  std::string detail;
};

struct BoundReport {
  Count exact = 0;
  std::vector<BoundCheck> checks;
  bool all_hold() const;
};

/// Moon-Moser, Hujter-Tuza, the dense triangle-free bound, its almost
/// triangle-free corollary, the almost-regular bound, the disjoint-P_3 bound
/// and the loop-monotonicity fact.
BoundReport bound_certificates(const Graph& g, const MisOptions& opts = {});

/// True when count <= 2^bound_log2, with a relative slack of 1e-9 for
/// bounds that are exact powers of two.
bool within_log2_bound(Count count, double bound_log2);

}  // namespace sumfree
