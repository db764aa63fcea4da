#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

struct CheckReport {
  std::string name;
  long long instances_checked = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  ///< witnesses, at most kMaxWitnesses kept
  std::vector<std::string> notes;     ///< diagnostics that are not assertions
  double elapsed_ms = 0;

  static constexpr std::size_t kMaxWitnesses = 25;
  bool passed() const { return failure_count == 0; }
  void fail(std::string witness);
  void ok() { ++instances_checked; }
  /// Counts one instance and records a witness when `cond` is false.
  void expect(bool cond, const std::function<std::string()>& witness);
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int workers = 1;
};

CheckReport check_lemma_free(int trials, int n_max, const VerifyConfig& cfg = {});
CheckReport check_lemma_mis(int n_max, const VerifyConfig& cfg = {});
/// Structured families plus seeded random graphs; at least `corpus_size`
/// graphs with at most `max_vertices` vertices each.
CheckReport check_bounds_suite(int corpus_size, int max_vertices, const VerifyConfig& cfg = {});
CheckReport check_count_decomposition(const std::vector<int>& n_list, const VerifyConfig& cfg = {});
CheckReport check_dprime_constants(int n_max, const VerifyConfig& cfg = {});

struct IsoTuple {
  int window;
  int n;
  int t;
  std::vector<int> s0;
  int ell;
};
/// Every admissible tuple with W <= w_max, n' = n + 4 ell <= n_max, ell <= ell_max.
std::vector<IsoTuple> lem_iso_grid(int w_max = 3, int n_max = 96, int ell_max = 4);
CheckReport check_lem_iso(const std::vector<IsoTuple>& grid, const VerifyConfig& cfg = {});
CheckReport check_single_even_sandwich(int n_max, const VerifyConfig& cfg = {}, int n_min = 2);
CheckReport check_furedi(int m_max, const VerifyConfig& cfg = {});
/// 2|G|/7 <= mu(G) <= |G|/2 and mu(Z_2^k) = 2^{k-1}.
CheckReport check_group_mu(int order_max, const VerifyConfig& cfg = {});
/// Maximal sum-free subsets of [n] inside S are at most those inside T for S in T.
CheckReport check_nondec(int trials, int n_max, const VerifyConfig& cfg = {});
/// The family constructions and their distinct-closure certificates.
CheckReport check_constructions(const VerifyConfig& cfg = {});

struct CheckSpec {
  std::string name;
  std::string description;
  std::function<CheckReport(const VerifyConfig&)> run;  ///< default parameters
};
const std::vector<CheckSpec>& check_registry();
/// Runs the named checks concurrently; reports come back in the given order.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const VerifyConfig& cfg);

}  // namespace sumfree
