#include "sumfree/enumerate.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "sumfree/linkgraph.hpp"
#include "sumfree/miscount.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/schur_engine.hpp"

namespace sumfree {
namespace {

bool mask_sum_free(std::uint64_t s) {
  for (auto m = s; m; m &= m - 1)
    if ((s << (std::countr_zero(m) + 1)) & s) return false;
  return true;
}

// Elements y of [n] such that S + {y} contains a Schur triple through y.
std::uint64_t mask_blocked(std::uint64_t s, std::uint64_t full) {
  std::uint64_t b = 0;
  for (auto m = s; m; m &= m - 1) {
    const int x = std::countr_zero(m) + 1;
    b |= (s << x) | (s >> x);
    if (x % 2 == 0) b |= std::uint64_t{1} << (x / 2 - 1);
  }
  return b & full;
}

template <class Pred>
Count oracle_count(int n, int workers, Pred&& keep) {
  if (n < 1) throw PreconditionError("oracle needs n >= 1");
  if (n > 26) throw LimitExceeded("oracle: n = " + std::to_string(n) + " exceeds 26");
  const std::uint64_t total = std::uint64_t{1} << n;
  const int chunk_bits = std::min(n, 8);
  const std::size_t chunks = std::size_t{1} << chunk_bits;
  const std::uint64_t per = total >> chunk_bits;
  std::vector<Count> partial(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t c) {
    Count k = 0;
    for (std::uint64_t s = c * per; s < (c + 1) * per; ++s)
      if (keep(s)) ++k;
    partial[c] = k;
  });
  return std::accumulate(partial.begin(), partial.end(), Count{0});
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void sum_free_subsets(const std::vector<int>& elems, std::size_t i, IntSubset& cur,
                      const std::function<void(const IntSubset&)>& visit) {
  if (i == elems.size()) {
    visit(cur);
    return;
  }
  sum_free_subsets(elems, i + 1, cur, visit);
  cur.insert(elems[i]);
  if (is_sum_free(cur)) sum_free_subsets(elems, i + 1, cur, visit);
  cur.erase(elems[i]);
}

Count pow2(int e) {
  if (e < 0 || e > 63) throw LimitExceeded("2^" + std::to_string(e) + " out of range");
  return Count{1} << e;
}

}  // namespace

Count f_oracle(int n, int workers) {
  return oracle_count(n, workers, mask_sum_free);
}

Count f_max_oracle(int n, int workers) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return oracle_count(n, workers, [full](std::uint64_t s) {
    return mask_sum_free(s) && (~s & full & ~mask_blocked(s, full)) == 0;
  });
}

namespace {
void check_branch_n(int n, const EnumOptions& opts) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (n > std::min(opts.max_n, 64))
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds limit " + std::to_string(std::min(opts.max_n, 64)));
}
}  // namespace

std::vector<IntSubset> enumerate_maximal_sum_free(int n, const EnumOptions& opts) {
  check_branch_n(n, opts);
  const auto masks = maximal_independent_sets(SchurHypergraph::interval(n), {opts.workers, opts.cap});
  std::vector<IntSubset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(IntSubset::from_mask(GroundSet(n), m));
  return out;
}

Count f_branch(int n, const EnumOptions& opts) {
  check_branch_n(n, opts);
  return count_independent(SchurHypergraph::interval(n), opts.workers);
}

Count f_max_branch(int n, const EnumOptions& opts) {
  check_branch_n(n, opts);
  return maximal_independent_sets(SchurHypergraph::interval(n), {opts.workers, opts.cap}).size();
}

std::string QuarterRatio::to_string() const {
  if (!exact) return "~" + std::to_string(num) + "/" + std::to_string(den);
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

QuarterRatio quarter_ratio(Count count, int n) {
  QuarterRatio r;
  if (n % 4 == 0) {
    r.exact = true;
    r.den = pow2(n / 4);
    const Count g = std::gcd(count, r.den);
    r.num = count / (g ? g : 1);
    r.den /= (g ? g : 1);
    if (count == 0) r.den = 1;
  } else {
    r.den = 4096;
    r.num = static_cast<Count>(std::llround(static_cast<long double>(count) * std::exp2l(12.0L - n / 4.0L)));
  }
  return r;
}

EnumRecord enumerate_record(int n, const std::string& method, const EnumOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  EnumRecord r;
  r.ground = std::to_string(n);
  r.n = n;
  r.method = method;
  if (method == "oracle") {
    r.f = f_oracle(n, opts.workers);
    r.f_max = f_max_oracle(n, opts.workers);
  } else if (method == "branch") {
    r.f = f_branch(n, opts);
    r.f_max = f_max_branch(n, opts);
  } else {
    throw PreconditionError("unknown method '" + method + "'");
  }
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

EnumRecord enumerate_group_record(const AbelianGroup& g, const EnumOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  EnumRecord r;
  r.ground = g.to_string();
  r.n = g.order();
  r.interval = false;
  r.method = "branch";
  r.f = f_group(g, opts.workers, std::min(opts.max_n, 64));
  r.f_max = f_max_group(g, opts.workers, std::min(opts.max_n, 64));
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

std::string csv_header() {
  return "n,residue_mod_4,f,f_max,ratio_fmax_over_2_pow_n_quarter,method,elapsed_ms";
}

std::string csv_row(const EnumRecord& r) {
  std::ostringstream os;
  os << r.ground << ',' << r.n % 4 << ',' << r.f << ',' << r.f_max << ','
     << quarter_ratio(r.f_max, r.n).to_string() << ',' << r.method << ',';
  if (r.elapsed_ms) os << *r.elapsed_ms;
  return os.str();
}

std::vector<IntSubset> two_step_enumerate(const IntSubset& f1, const IntSubset& f2, int n, std::size_t cap) {
  if (f1.n() != n || f2.n() != n) throw PreconditionError("two_step_enumerate: F1 and F2 must be subsets of [n]");
  if (!(f1 & f2).empty()) throw PreconditionError("two_step_enumerate: F1 and F2 must be disjoint");
  if (!is_sum_free(f2)) throw PreconditionError("two_step_enumerate: F2 must be sum-free");
  std::set<IntSubset> found;
  IntSubset cur(GroundSet{n});
  MisOptions mo;
  mo.enum_cap = cap;
  sum_free_subsets(f1.members(), 0, cur, [&](const IntSubset& s) {
    const Graph l = link_graph(s, f2);
    for (const auto& ind : enumerate_mis(l, mo)) {
      IntSubset m = s;
      for (int v : ind) m.insert(static_cast<int>(l.label(v)));
      if (is_maximal_sum_free(m)) {
        found.insert(std::move(m));
        if (found.size() > cap) throw LimitExceeded("two_step_enumerate: more than " + std::to_string(cap) + " sets");
      }
    }
  });
  return {found.begin(), found.end()};
}

RefinedCounts refined_counts(int n, int m, const std::vector<int>& s) {
  if (n < 2 || m < 1 || m > n / 2) throw PreconditionError("refined_counts: need 1 <= m <= n/2");
  IntSubset base(GroundSet{n});
  for (int x : s) {
    if (x < 1 || x > n / 2) throw PreconditionError("refined_counts: S must lie in [n/2]");
    if (x == m || x == 2 * m) throw PreconditionError("refined_counts: S must avoid m and 2m");
    base.insert(x);
  }
  base.insert(m);
  if (!is_sum_free(base)) throw PreconditionError("refined_counts: S + {m} is not sum-free");

  RefinedCounts r;
  r.n = n;
  r.m = m;
  r.s = base.members();
  r.s.erase(std::find(r.s.begin(), r.s.end(), m));
  const Graph l = link_family({n, m, r.s});
  r.mis_link = count_mis(l);
  r.ratio_c = quarter_ratio(r.mis_link, n);
  if (base.min() != m) return r;
  for (const auto& ind : enumerate_mis(l)) {
    IntSubset full = base;
    for (int v : ind) full.insert(static_cast<int>(l.label(v)));
    if (is_maximal_sum_free(full)) ++r.msf;
  }
  return r;
}

SingleEvenCensus single_even_census(int n, int workers, int max_n) {
  if (n < 1) throw PreconditionError("single_even_census: n must be at least 1");
  if (n > max_n) throw LimitExceeded("single_even_census: n exceeds " + std::to_string(max_n));
  SingleEvenCensus c;
  EnumOptions eo;
  eo.workers = workers;
  eo.max_n = std::max(max_n, 40);
  for (const auto& m : enumerate_maximal_sum_free(n, eo))
    if (stats(m).even_count == 1) ++c.f_prime_max;

  std::vector<int> evens;
  for (int x = 2; x <= n; x += 2) evens.push_back(x);
  std::vector<Count> single(evens.size());
  parallel_for(evens.size(), workers, [&](std::size_t i) { single[i] = count_mis(link_single_even(n, evens[i])); });
  for (auto v : single) c.upper = checked_add(c.upper, v);

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < evens.size(); ++i)
    for (std::size_t j = i + 1; j < evens.size(); ++j) pairs.emplace_back(evens[i], evens[j]);
  std::vector<Count> pair_counts(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t i) {
    pair_counts[i] = count_mis(link_pair_even(n, pairs[i].first, pairs[i].second));
  });
  for (auto v : pair_counts) c.pair_sum = checked_add(c.pair_sum, v);
  c.lower = static_cast<std::int64_t>(c.upper) - 2 * static_cast<std::int64_t>(c.pair_sum);
  return c;
}

Count single_even_closed_form(int n, int m) {
  if (m % 2 != 0 || 3 * m <= 2 * n || m > n)
    throw PreconditionError("single_even_closed_form: need even m with 2n/3 < m <= n");
  const int p = (n - m + 1) / 2;
  const int loop = (m / 2) % 2;
  const int odds = (n + 1) / 2;
  const int rest = odds - 3 * p - loop;
  if (rest < 0 || rest % 2 != 0) throw Error("single_even_closed_form: no perfect matching on the remainder");
  return pow2(p + rest / 2);
}

DprimeSum dprime_sum(int n) {
  if (n < 2) throw PreconditionError("dprime_sum: n must be at least 2");
  DprimeSum d;
  d.n = n;
  for (int m = 2; m <= n; m += 2) {
    const Count c = count_mis(link_single_even(n, m));
    d.terms.emplace_back(m, c);
    d.full = checked_add(d.full, c);
    if (3 * m > 2 * n) {
      d.restricted = checked_add(d.restricted, c);
      d.closed_terms = checked_add(d.closed_terms, single_even_closed_form(n, m));
    }
  }
  if (n % 4 == 0) d.geometric = 3 * pow2(n / 4) - 3;
  return d;
}

SumsetCensus small_sumset_count(int d, int s, double r, double delta, int workers) {
  if (d < 1 || s < 1 || s > d) throw PreconditionError("small_sumset_count: need 1 <= s <= D");
  const double log_total = std::lgamma(d + 1.0) - std::lgamma(s + 1.0) - std::lgamma(d - s + 1.0);
  if (log_total > std::log(1e8)) throw LimitExceeded("small_sumset_count: binom(D, s) exceeds 1e8");
  SumsetCensus c;
  c.d = d;
  c.s = s;
  c.r = r;
  c.delta = delta;
  c.total = static_cast<Count>(std::llround(std::exp(log_total)));
  const int bound = static_cast<int>(std::floor(r * s + 1e-9));

  std::vector<Count> per_first(static_cast<std::size_t>(d - s + 1), 0);
  parallel_for(per_first.size(), workers, [&](std::size_t idx) {
    std::vector<int> hits(static_cast<std::size_t>(2 * d + 1), 0);
    std::vector<int> chosen;
    int distinct = 0;
    Count found = 0;
    auto add = [&](int e, int sign) {
      auto bump = [&](int v) {
        int& h = hits[static_cast<std::size_t>(v)];
        if (sign > 0 && h++ == 0) ++distinct;
        if (sign < 0 && --h == 0) --distinct;
      };
      for (int x : chosen) bump(x + e);
      bump(2 * e);
    };
    std::function<void(int)> rec = [&](int next) {
      if (static_cast<int>(chosen.size()) == s) {
        ++found;
        return;
      }
      const int need = s - static_cast<int>(chosen.size());
      for (int e = next; e <= d - need + 1; ++e) {
        add(e, 1);
        chosen.push_back(e);
        if (distinct <= bound) rec(e + 1);
        chosen.pop_back();
        add(e, -1);
      }
    };
    const int first = static_cast<int>(idx) + 1;
    add(first, 1);
    chosen.push_back(first);
    if (distinct <= bound) rec(first + 1);
    per_first[idx] = found;
  });
  c.count = std::accumulate(per_first.begin(), per_first.end(), Count{0});

  const double top = r * s / 2.0;
  const double log2_binom = top >= s ? (std::lgamma(top + 1) - std::lgamma(s + 1.0) - std::lgamma(top - s + 1)) / std::log(2.0)
                                     : -INFINITY;
  c.green_morris_log2 = delta * s + log2_binom + std::floor(r + delta) * std::log2(static_cast<double>(d));
  return c;
}

}  // namespace sumfree
