#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/abelian.hpp"
#include "sumfree/setcore.hpp"

namespace sumfree {

/// Brute force over all 2^n subsets (n <= 26).
Count f_oracle(int n, int workers = 1);
Count f_max_oracle(int n, int workers = 1);

struct EnumOptions {
  int workers = 1;
  int max_n = 40;
  std::size_t cap = std::numeric_limits<std::size_t>::max();
};

/// Maximal sum-free subsets of [n] in canonical order.
std::vector<IntSubset> enumerate_maximal_sum_free(int n, const EnumOptions& opts = {});
/// f(n) and f_max(n) by branching on the Schur hypergraph.
Count f_branch(int n, const EnumOptions& opts = {});
Count f_max_branch(int n, const EnumOptions& opts = {});

/// f_max / 2^{n/4}. Exact (a reduced fraction num/den) when 4 | n, otherwise
/// round(count * 2^{12 - n/4}) over 4096.
struct QuarterRatio {
  bool exact = false;
  Count num = 0;
  Count den = 1;
  std::string to_string() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
QuarterRatio quarter_ratio(Count count, int n);

struct EnumRecord {
  std::string ground;  ///< "n" for [n], group descriptor otherwise
  int n = 0;           ///< ground size
  bool interval = true;
  Count f = 0;
  Count f_max = 0;
  std::string method;  ///< oracle | branch | two-step
  std::optional<double> elapsed_ms;
};

/// method: "oracle" or "branch".
EnumRecord enumerate_record(int n, const std::string& method, const EnumOptions& opts = {});
EnumRecord enumerate_group_record(const AbelianGroup& g, const EnumOptions& opts = {});

std::string csv_header();
std::string csv_row(const EnumRecord& r);

/// Maximal sum-free subsets of [n] inside F1 u F2, found by extending each
/// sum-free S in F1 with the maximal independent sets of L_S[F2]. F2 must be
/// sum-free.
std::vector<IntSubset> two_step_enumerate(const IntSubset& f1, const IntSubset& f2, int n,
                                          std::size_t cap = 1'000'000);

struct RefinedCounts {
  int n = 0;
  int m = 0;
  std::vector<int> s;
  Count msf = 0;
  Count mis_link = 0;
  QuarterRatio ratio_c;
};
/// msf counts I in MIS(L(n, m, S)) with S + {m} + I maximal sum-free and
/// least element m.
RefinedCounts refined_counts(int n, int m, const std::vector<int>& s);

struct SingleEvenCensus {
  Count f_prime_max = 0;  ///< maximal sum-free sets with exactly one even member
  std::int64_t lower = 0;
  Count upper = 0;
  Count pair_sum = 0;     ///< sum over unordered pairs x < x' of MIS(L_{x,x'}[O])
};
SingleEvenCensus single_even_census(int n, int workers = 1, int max_n = 30);

/// MIS(L_m[O]) for even m > 2n/3 from its component structure: p = #{odd
/// i <= n - m} paths on three vertices, a loop at m/2 when m/2 is odd, and a
/// perfect matching on the rest.
Count single_even_closed_form(int n, int m);

struct DprimeSum {
  int n = 0;
  Count full = 0;         ///< sum over all even m of MIS(L_m[O])
  Count restricted = 0;   ///< same, over even m > 2n/3
  Count closed_terms = 0; ///< single_even_closed_form summed over even m > 2n/3
  std::optional<Count> geometric;  ///< 3 * 2^{n/4} - 3 when 4 | n
  std::vector<std::pair<int, Count>> terms;
};
DprimeSum dprime_sum(int n);

struct SumsetCensus {
  int d = 0;
  int s = 0;
  double r = 0;
  Count total = 0;   ///< binom(D, s)
  Count count = 0;   ///< sets with |S + S| <= R s
  double delta = 0;
  double green_morris_log2 = 0;
};
SumsetCensus small_sumset_count(int d, int s, double r, double delta = 0.1, int workers = 1);

}  // namespace sumfree
