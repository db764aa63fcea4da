// Acceptance runner. `acceptance N` checks criterion N, `acceptance` checks
// all of them. Prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../oracle.hpp"
#include "sumfree/cli.hpp"
#include "sumfree/constructions.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/linkgraph.hpp"
#include "sumfree/miscount.hpp"
#include "sumfree/verify.hpp"

using namespace sumfree;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (lines.size() < 20) lines.push_back(what);
    }
  }
};

int workers() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string report_failures(const CheckReport& r) {
  std::string s = r.name + ": " + std::to_string(r.failure_count) + " failures";
  for (const auto& w : r.failures) s += "\n    " + w;
  return s;
}

Outcome criterion1() {
  Outcome o;
  EnumOptions opts;
  opts.workers = workers();
  for (int n = 1; n <= 22; ++n) {
    const Count listed = enumerate_maximal_sum_free(n, opts).size();
    const Count brute = f_max_oracle(n, opts.workers);
    o.expect(listed == brute, "n=" + std::to_string(n) + " branch lists " + std::to_string(listed) + ", oracle " +
                                  std::to_string(brute));
    if (n <= 14) {
      const Count ref = oracle::all_maximal_sum_free(n).size();
      o.expect(ref == brute, "n=" + std::to_string(n) + " definition-level count " + std::to_string(ref));
    }
  }
  for (int n = 1; n <= 24; ++n) {
    const Count a = f_branch(n, opts);
    const Count b = f_oracle(n, opts.workers);
    o.expect(a == b, "n=" + std::to_string(n) + " f branch " + std::to_string(a) + ", oracle " + std::to_string(b));
    if (n <= 16) o.expect(oracle::count_sum_free(n) == b, "n=" + std::to_string(n) + " definition-level f differs");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 4; n <= 22; ++n) {
    const Count v = f_max_oracle(n, workers());
    o.expect(v >= (Count{1} << (n / 4)), "f_max(" + std::to_string(n) + ")=" + std::to_string(v));
  }
  for (int n : {8, 12, 16, 20}) {
    const Family f = interval_family(n);
    o.expect(f.members.size() == (std::size_t{1} << (n / 4)),
             "interval_family(" + std::to_string(n) + ") has " + std::to_string(f.members.size()));
    o.expect(verify_family(f, workers()).ok(), "interval_family(" + std::to_string(n) + ") fails verification");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n : {16, 20, 24, 28, 32})
    for (int m = 2; m <= n; m += 2) {
      if (3 * m <= 2 * n) continue;
      const Count got = count_mis(link_single_even(n, m));
      const Count want = (m / 2) % 2 == 0 ? Count{1} << (m / 4) : Count{1} << ((m - 2) / 4);
      o.expect(got == want, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " MIS=" + std::to_string(got) +
                                " want " + std::to_string(want));
      if (n <= 20) {
        const Count ref = oracle::mis(link_single_even(n, m)).size();
        o.expect(ref == got, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " brute force " + std::to_string(ref));
      }
    }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 4; n <= 32; n += 4) {
    const DprimeSum d = dprime_sum(n);
    const Count want = 3 * (Count{1} << (n / 4)) - 3;
    o.expect(d.restricted == want, "n=" + std::to_string(n) + " restricted sum " + std::to_string(d.restricted) +
                                       " != 3*2^{n/4}-3 = " + std::to_string(want));
  }
  double prev = 0;
  for (int n = 16; n <= 32; n += 4) {
    const DprimeSum d = dprime_sum(n);
    const double ratio = static_cast<double>(d.full) / std::ldexp(1.0, n / 4);
    o.expect(ratio > prev, "n=" + std::to_string(n) + " full ratio " + std::to_string(ratio) + " does not increase");
    o.expect(ratio <= 3.0, "n=" + std::to_string(n) + " full ratio " + std::to_string(ratio) + " is above the limit 3");
    prev = ratio;
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int n = 4; n <= 18; ++n) {
    const SingleEvenCensus c = single_even_census(n, workers());
    o.expect(c.lower <= static_cast<std::int64_t>(c.f_prime_max) && c.f_prime_max <= c.upper,
             "n=" + std::to_string(n) + " lower=" + std::to_string(c.lower) + " f'=" + std::to_string(c.f_prime_max) +
                 " upper=" + std::to_string(c.upper));
    Count ref = 0;
    for (const auto& s : oracle::all_maximal_sum_free(n)) {
      int evens = 0;
      for (int x : s) evens += x % 2 == 0;
      ref += evens == 1;
    }
    o.expect(ref == c.f_prime_max, "n=" + std::to_string(n) + " brute-force f'=" + std::to_string(ref));
  }
  return o;
}

Outcome from_report(const CheckReport& r) {
  Outcome o;
  o.expect(r.passed(), report_failures(r));
  return o;
}

Outcome criterion6() {
  const CheckReport r = check_bounds_suite(500, 36, {1, workers()});
  Outcome o = from_report(r);
  long long graphs = 0;
  for (const auto& n : r.notes)
    if (n.rfind("corpus graphs: ", 0) == 0) graphs = std::stoll(n.substr(15));
  o.expect(graphs >= 500, "corpus has " + std::to_string(graphs) + " graphs");
  return o;
}

Outcome criterion7() {
  Outcome o = from_report(check_furedi(24, {1, workers()}));
  for (int m = 6; m <= 24; ++m) {
    const Count exact = oracle::mis(cycle(m)).size();
    o.expect(exact == mis_cycle(m - 2) + mis_cycle(m - 3), "C_" + std::to_string(m) + " brute force breaks the recurrence");
  }
  for (int m = 4; m <= 64; ++m)
    o.expect(std::log2(static_cast<long double>(mis_cycle(m))) < 0.49L * m, "C_" + std::to_string(m) + " above 2^{0.49m}");
  return o;
}

Outcome criterion8() {
  const auto grid = lem_iso_grid(3, 96, 4);
  Outcome o = from_report(check_lem_iso(grid, {1, workers()}));
  o.expect(grid.size() >= 50, "grid has " + std::to_string(grid.size()) + " tuples");
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    const int m = mu(AbelianGroup(std::vector<int>(static_cast<std::size_t>(k), 2)));
    o.expect(m == 1 << (k - 1), "mu(Z_2^" + std::to_string(k) + ")=" + std::to_string(m));
  }
  for (int k = 2; k <= 4; ++k) {
    const Family f = z2k_family(k);
    o.expect(f.members.size() == (std::size_t{1} << ((1 << k) / 4)), "z2k_family(" + std::to_string(k) + ") has " +
                                                                          std::to_string(f.members.size()));
    o.expect(verify_family(f, workers()).ok(), "z2k_family(" + std::to_string(k) + ") fails verification");
  }
  const Graph prism = cartesian_product(complete(3), path(2));
  o.expect(count_mis(prism) == 6 && oracle::mis(prism).size() == 6, "MIS(K3 x K2) != 6");
  for (int n : {27, 36, 45}) {
    const PrismCensus c = zn_prism_census(n);
    const int others = static_cast<int>(c.other_sizes.size());
    o.expect(others <= 4, "Z_" + std::to_string(n) + " has " + std::to_string(others) + " non-prism components");
    o.expect(c.prisms + others == c.components, "Z_" + std::to_string(n) + " census does not add up");
    const int e = c.window_size / 6 - 2;
    const double need = e * std::log2(6.0);
    o.expect(std::log2(static_cast<double>(c.mis)) >= need - 1e-9,
             "Z_" + std::to_string(n) + " MIS=" + std::to_string(c.mis) + " below 6^" + std::to_string(e));
  }
  const Family f7 = exponent7_family(AbelianGroup({7, 7}));
  o.expect(f7.members.size() == 64, "exponent7_family(Z7xZ7) has " + std::to_string(f7.members.size()));
  o.expect(verify_family(f7, workers()).ok(), "exponent7_family(Z7xZ7) fails verification");
  return o;
}

std::vector<std::pair<std::string, Graph>> corpus60() {
  std::vector<std::pair<std::string, Graph>> c;
  c.emplace_back("path60", path(60));
  c.emplace_back("cycle60", cycle(60));
  c.emplace_back("matching30", matching(30));
  c.emplace_back("ladder30", cartesian_product(cycle(30), path(2)));
  c.emplace_back("grid6x10", cartesian_product(path(6), path(10)));
  Graph prisms, p3s, c5s, k4s;
  for (int i = 0; i < 10; ++i) prisms = disjoint_union(prisms, cartesian_product(complete(3), path(2)));
  for (int i = 0; i < 20; ++i) p3s = disjoint_union(p3s, path(3));
  for (int i = 0; i < 12; ++i) c5s = disjoint_union(c5s, cycle(5));
  for (int i = 0; i < 15; ++i) k4s = disjoint_union(k4s, complete(4));
  c.emplace_back("prisms10", prisms);
  c.emplace_back("p3s20", p3s);
  c.emplace_back("c5s12", c5s);
  c.emplace_back("k4s15", k4s);
  for (int m = 1; m <= 59; m += 2) c.emplace_back("L(120," + std::to_string(m) + ",{})", link_family({120, m, {}}));
  for (int x = 2; x <= 120; x += 2) c.emplace_back("L_" + std::to_string(x) + "[O],120", link_single_even(120, x));
  std::mt19937_64 rng(60);
  for (double p : {0.05, 0.08, 0.1, 0.15, 0.2, 0.3, 0.5, 0.7})
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<std::int64_t> labels(60);
      for (int i = 0; i < 60; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
      Graph g(labels), b(labels);
      std::bernoulli_distribution edge(p);
      for (int u = 0; u < 60; ++u)
        for (int v = u + 1; v < 60; ++v) {
          if (edge(rng)) g.add_edge(u, v);
          if ((u < 30) != (v < 30) && edge(rng)) b.add_edge(u, v);
        }
      std::ostringstream name;
      name << "gnp(60," << p << ")#" << rep;
      c.emplace_back(name.str(), g);
      c.emplace_back("bipartite " + name.str(), b);
    }
  return c;
}

Outcome criterion10() {
  Outcome o;
  {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run({"--no-cache", "--workers", "8", "enumerate", "--n", "28"}, out, err);
    const double s = seconds_since(t0);
    o.expect(code == 0, "enumerate --n 28 exited " + std::to_string(code) + ": " + err.str());
    o.expect(s <= 60, "enumerate --n 28 took " + std::to_string(s) + " s");
    std::cout << "  enumerate --n 28 (8 workers): " << s << " s\n";
  }
  MisOptions opts;
  opts.vertex_limit = 64;
  double worst = 0;
  std::string worst_name;
  const auto corpus = corpus60();
  for (const auto& [name, g] : corpus) {
    o.expect(g.size() == 60, name + " has " + std::to_string(g.size()) + " vertices");
    const auto t0 = std::chrono::steady_clock::now();
    try {
      count_mis(g, opts);
    } catch (const std::exception& e) {
      o.expect(false, name + ": " + e.what());
    }
    const double s = seconds_since(t0);
    o.expect(s <= 10, name + " took " + std::to_string(s) + " s");
    if (s > worst) worst = s, worst_name = name;
  }
  std::cout << "  count_mis over " << corpus.size() << " 60-vertex graphs, slowest " << worst_name << ": " << worst
            << " s\n";
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"oracle agreement for f and f_max", criterion1},
      {"f_max(n) >= 2^{n/4} and interval family sizes", criterion2},
      {"MIS(L_m[O]) per-case values for m > 2n/3", criterion3},
      {"restricted D' sum equals 3*2^{n/4}-3 and full ratio rises toward 3", criterion4},
      {"single-even sandwich bound for 4 <= n <= 18", criterion5},
      {"MIS upper bounds on a corpus of >= 500 graphs", criterion6},
      {"cycle recurrence and MIS(C_m) < 2^{0.49m}", criterion7},
      {"shift isomorphism on the parameter grid", criterion8},
      {"group constructions and prism census", criterion9},
      {"performance of enumerate --n 28 and count_mis at 60 vertices", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) which.push_back(i);
  bool all = true;
  for (int id : which) {
    if (id < 1 || id > static_cast<int>(criteria().size())) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    const auto& [title, fn] = criteria()[static_cast<std::size_t>(id - 1)];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0));
    for (const auto& l : o.lines) std::printf("    %s\n", l.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
