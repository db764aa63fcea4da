#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

class AbelianGroup;

/// The Schur-triple hypergraph of a ground structure with at most 64
/// elements: vertices are element indices, edges are the sets {x, y, x+y}
/// (of size 1, 2 or 3). Sum-free sets are exactly its independent sets.
class SchurHypergraph {
 public:
  /// [n]; element x has index x-1.
  static SchurHypergraph interval(int n);
  /// G; elements by flat index.
  static SchurHypergraph group(const AbelianGroup& g);

  int size() const { return size_; }
  /// Masks P such that {v} + P is an edge; minimal under inclusion.
  const std::vector<std::uint64_t>& partners(int v) const { return partners_[static_cast<std::size_t>(v)]; }

  bool can_add(int v, std::uint64_t chosen) const {
    for (auto p : partners(v))
      if ((p & ~chosen) == 0) return false;
    return true;
  }
  bool is_independent(std::uint64_t set) const;
  bool is_maximal(std::uint64_t set) const;

 private:
  explicit SchurHypergraph(int size);
  void add_edge(std::uint64_t edge);
  void finalize();

  int size_;
  std::vector<std::vector<std::uint64_t>> partners_;
};

struct EngineOptions {
  int workers = 1;
  std::size_t cap = std::numeric_limits<std::size_t>::max();
};

/// Number of independent (sum-free) sets, including the empty set.
Count count_independent(const SchurHypergraph& h, int workers = 1);

/// All maximal independent sets as masks, canonically ordered (lexicographic
/// on sorted element indices). Throws LimitExceeded past opts.cap.
std::vector<std::uint64_t> maximal_independent_sets(const SchurHypergraph& h, const EngineOptions& opts = {});

/// Lexicographic order on the sorted member lists of two masks.
bool canonical_mask_less(std::uint64_t a, std::uint64_t b);

}  // namespace sumfree
