#include "sumfree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "sumfree/abelian.hpp"
#include "sumfree/constructions.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/linkgraph.hpp"
#include "sumfree/miscount.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/setcore.hpp"

namespace sumfree {

void CheckReport::fail(std::string witness) {
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(witness));
}

void CheckReport::expect(bool cond, const std::function<std::string()>& witness) {
  ++instances_checked;
  if (!cond) fail(witness());
}

namespace {

using Clock = std::chrono::steady_clock;

std::mt19937_64 rng_for(const VerifyConfig& cfg, std::string_view name) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string_view>{}(name))};
  return std::mt19937_64(seq);
}

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

template <class Body>
CheckReport timed(std::string name, Body&& body) {
  CheckReport r;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

std::uint64_t label_mask(const Graph& g, const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << (g.label(v) - 1);
  return m;
}

std::uint64_t bits_in(int lo, int hi) {
  std::uint64_t m = 0;
  for (int x = lo; x <= hi; ++x) m |= std::uint64_t{1} << (x - 1);
  return m;
}

std::vector<std::uint64_t> maximal_masks(int n, int workers) {
  std::vector<std::uint64_t> out;
  EnumOptions eo;
  eo.workers = workers;
  for (const auto& s : enumerate_maximal_sum_free(n, eo)) out.push_back(s.mask());
  return out;
}

IntSubset random_sum_free(int n, int top, std::mt19937_64& rng) {
  IntSubset s(GroundSet{n});
  std::vector<int> order;
  for (int x = 1; x <= top; ++x) order.push_back(x);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (int x : order) {
    if (!coin(rng)) continue;
    s.insert(x);
    if (!is_sum_free(s)) s.erase(x);
  }
  return s;
}

struct Shape {
  int p3 = 0;
  int k2 = 0;
  int loop_singletons = 0;
  int other = 0;
};

Shape shape_of(const Graph& g) {
  Shape s;
  for (const auto& comp : connected_components(g)) {
    const Graph h = induced_subgraph(g, comp);
    const int loops = h.loop_count();
    const int e = h.edge_count() - loops;
    if (h.size() == 1 && loops == 1)
      ++s.loop_singletons;
    else if (loops == 0 && h.size() == 2 && e == 1)
      ++s.k2;
    else if (loops == 0 && h.size() == 3 && e == 2)
      ++s.p3;
    else
      ++s.other;
  }
  return s;
}

bool is_path_component(const Graph& h) {
  const int e = h.edge_count() - h.loop_count();
  if (e != h.size() - 1) return false;
  for (int v = 0; v < h.size(); ++v)
    if (h.neighbors(v).size() > 2) return false;
  return true;
}

}  // namespace

CheckReport check_lemma_free(int trials, int n_max, const VerifyConfig& cfg) {
  return timed("lemma_free", [&](CheckReport& r) {
    auto rng = rng_for(cfg, "lemma_free");
    for (int t = 0; t < trials; ++t) {
      const int n = std::uniform_int_distribution<int>(2, std::max(2, n_max))(rng);
      const int top = std::uniform_int_distribution<int>(1, n - 1)(rng);
      const IntSubset s = random_sum_free(n, top, rng);
      const int lo = s.max().value_or(0) + 1;
      IntSubset b(GroundSet{n});
      std::bernoulli_distribution coin(0.6);
      for (int x = lo; x <= n; ++x)
        if (coin(rng)) b.insert(x);
      const Graph g = link_graph(s, b);
      r.expect(is_triangle_free(g), [&] { return "n=" + std::to_string(n) + " S=" + show(s.members()) + " B=" + show(b.members()); });
    }
  });
}

CheckReport check_lemma_mis(int n_max, const VerifyConfig& cfg) {
  return timed("lemma_mis", [&](CheckReport& r) {
    for (int n = 2; n <= n_max; ++n) {
      const int h = n / 2;
      const IntSubset b = IntSubset::interval(GroundSet{n}, h + 1, n);
      const std::uint64_t low = bits_in(1, h);
      std::map<std::uint64_t, std::vector<std::uint64_t>> by_s;
      for (auto m : maximal_masks(n, cfg.workers)) by_s[m & low].push_back(m & ~low);
      for (const auto& [smask, tops] : by_s) {
        const IntSubset s = IntSubset::from_mask(GroundSet{n}, smask);
        const Graph g = link_graph(s, b);
        std::set<std::uint64_t> mis;
        for (const auto& ind : enumerate_mis(g)) mis.insert(label_mask(g, ind));
        for (auto top : tops)
          r.expect(mis.count(top) == 1, [&] {
            return "n=" + std::to_string(n) + " S=" + show(s.members()) +
                   " I=" + show(IntSubset::from_mask(GroundSet{n}, top).members());
          });
      }
    }
  });
}

CheckReport check_bounds_suite(int corpus_size, int max_vertices, const VerifyConfig& cfg) {
  return timed("bounds_suite", [&](CheckReport& r) {
    std::vector<std::pair<std::string, Graph>> corpus;
    auto add = [&](std::string name, Graph g) {
      if (g.size() <= max_vertices) corpus.emplace_back(std::move(name), std::move(g));
    };
    for (int m = 1; m <= 30; ++m) add("path" + std::to_string(m), path(m));
    for (int m = 3; m <= 30; ++m) add("cycle" + std::to_string(m), cycle(m));
    for (int k = 1; k <= 15; ++k) add("matching" + std::to_string(k), matching(k));
    for (int m = 1; m <= 10; ++m) add("complete" + std::to_string(m), complete(m));
    const Graph prism = cartesian_product(complete(3), path(2));
    Graph prisms, p3s, c5s;
    for (int k = 1; k <= 6; ++k) add("prisms" + std::to_string(k), prisms = disjoint_union(prisms, prism));
    for (int k = 1; k <= 12; ++k) add("p3s" + std::to_string(k), p3s = disjoint_union(p3s, path(3)));
    for (int k = 1; k <= 7; ++k) add("c5s" + std::to_string(k), c5s = disjoint_union(c5s, cycle(5)));
    for (int k = 2; k <= 18; ++k) add("ladder" + std::to_string(k), cartesian_product(cycle(2 * k), path(2)));
    for (int n = 8; n <= std::min(2 * max_vertices, 40); n += 2)
      for (int m = 1; m <= n / 2; m += 2) add("L(" + std::to_string(n) + "," + std::to_string(m) + ",{})", link_family({n, m, {}}));
    for (int n = 8; n <= std::min(2 * max_vertices, 48); n += 4)
      for (int x = 2; x <= n; x += 4) add("L_" + std::to_string(x) + "[O]," + std::to_string(n), link_single_even(n, x));

    auto rng = rng_for(cfg, "bounds_suite");
    const int random_count = std::max(corpus_size - static_cast<int>(corpus.size()), 250);
    for (int i = 0; i < random_count; ++i) {
      const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
      const int kind = i % 4;
      const double p = std::uniform_real_distribution<double>(0.03, kind == 0 ? 0.5 : 0.25)(rng);
      std::bernoulli_distribution edge(p), loop(0.1);
      std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
      std::iota(labels.begin(), labels.end(), 1);
      Graph g(labels);
      const int split = n / 2;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const bool bipartite_ok = kind != 1 || ((u < split) != (v < split));
          if (bipartite_ok && edge(rng)) g.add_edge(u, v);
        }
      if (kind == 2)
        for (int v = 0; v < n; ++v)
          if (loop(rng)) g.add_edge(v, v);
      add("random" + std::to_string(i) + "(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")", g);
    }

    std::vector<BoundReport> reports(corpus.size());
    parallel_for(corpus.size(), cfg.workers, [&](std::size_t i) { reports[i] = bound_certificates(corpus[i].second); });
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (const auto& c : reports[i].checks)
        r.expect(c.holds, [&] {
          return corpus[i].first + ": " + c.name + " exact=" + std::to_string(c.exact) +
                 " bound=2^" + std::to_string(c.bound_log2) + " " + c.detail;
        });
    r.notes.push_back("corpus graphs: " + std::to_string(corpus.size()));
  });
}

CheckReport check_count_decomposition(const std::vector<int>& n_list, const VerifyConfig&) {
  return timed("count_decomposition", [&](CheckReport& r) {
    for (int n : n_list) {
      if (n % 4 != 0 || n > 48) {
        r.fail("n=" + std::to_string(n) + " outside 4 | n <= 48");
        continue;
      }
      for (int m = 2; m <= n; m += 2) {
        const Graph g = link_single_even(n, m);
        const Count mis = count_mis(g);
        const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        if (3 * m > 2 * n) {
          const Shape s = shape_of(g);
          const bool half_odd = (m / 2) % 2 == 1;
          const int k2 = half_odd ? (3 * m - 2 * n - 2) / 4 : (3 * m - 2 * n) / 4;
          r.expect(s.p3 == (n - m) / 2 && s.k2 == k2 && s.loop_singletons == (half_odd ? 1 : 0) && s.other == 0, [&] {
            return tag + " shape p3=" + std::to_string(s.p3) + " k2=" + std::to_string(s.k2) +
                   " loops=" + std::to_string(s.loop_singletons) + " other=" + std::to_string(s.other);
          });
          const Count want = Count{1} << (half_odd ? (m - 2) / 4 : m / 4);
          r.expect(mis == want, [&] { return tag + " MIS=" + std::to_string(mis) + " want " + std::to_string(want); });
        } else {
          int loops_seen = 0;
          bool paths = true;
          for (const auto& comp : connected_components(g)) {
            const Graph h = induced_subgraph(g, comp);
            if (!is_path_component(h)) paths = false;
            if (h.loop_count() == 0 && h.size() < 3) paths = false;
            if (h.loop_count() > 0) {
              loops_seen += h.loop_count();
              if (h.size() < 2 || !h.has_loop(h.find_label(m / 2))) paths = false;
            }
          }
          const bool loops_ok = loops_seen == ((m / 2) % 2 == 1 ? 1 : 0);
          r.expect(paths && loops_ok, [&] { return tag + " not a union of long paths"; });
          const int k = disjoint_p3_packing(g);
          r.expect(10 * (k + 1) >= n, [&] { return tag + " P3 packing " + std::to_string(k) + " < n/10 - 1"; });
          r.expect(within_log2_bound(mis, g.size() / 2.0 - k / 25.0),
                   [&] { return tag + " MIS=" + std::to_string(mis) + " above the P3 bound"; });
        }
      }
      const DprimeSum d = dprime_sum(n);
      r.expect(d.restricted <= 3 * (Count{1} << (n / 4)) - 3,
               [&] { return "n=" + std::to_string(n) + " restricted sum " + std::to_string(d.restricted); });
    }
  });
}

CheckReport check_dprime_constants(int n_max, const VerifyConfig&) {
  return timed("dprime_constants", [&](CheckReport& r) {
    const double target[4] = {3.0, 3.0 * std::exp2(-0.25), std::exp2(1.5), std::exp2(1.25)};
    double c_full[4] = {0, 0, 0, 0}, c_restricted[4] = {0, 0, 0, 0};
    for (int n = 8; n <= n_max; ++n) {
      const DprimeSum d = dprime_sum(n);
      for (auto [m, c] : d.terms)
        if (3 * m > 2 * n)
          r.expect(c == single_even_closed_form(n, m), [&, m = m, c = c] {
            return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " MIS=" + std::to_string(c);
          });
      const double scale = std::exp2(n / 4.0);
      const double full = static_cast<double>(d.full) / scale;
      const double restricted = static_cast<double>(d.restricted) / scale;
      r.expect(full >= 1.0, [&] { return "n=" + std::to_string(n) + " ratio " + std::to_string(full) + " < 1"; });
      const int res = n % 4;
      c_full[res] = std::max(c_full[res], std::fabs(full - target[res]) * std::exp2(n / 12.0));
      c_restricted[res] = std::max(c_restricted[res], std::fabs(restricted - target[res]) * std::exp2(n / 12.0));
      std::ostringstream os;
      os << "n=" << n << " full=" << full << " restricted=" << restricted << " limit=" << target[res];
      r.notes.push_back(os.str());
    }
    for (int res = 0; res < 4; ++res) {
      std::ostringstream os;
      os << "n%4=" << res << " fitted c (full)=" << c_full[res] << " (restricted)=" << c_restricted[res];
      r.notes.push_back(os.str());
    }
  });
}

std::vector<IsoTuple> lem_iso_grid(int w_max, int n_max, int ell_max) {
  std::vector<IsoTuple> grid;
  for (int w = 1; w <= w_max; ++w)
    for (int n = 8; n <= n_max; n += 4)
      for (int t = -w; t <= w; ++t) {
        if (n / 4 + t < 8 * w) continue;
        for (std::uint32_t sub = 0; sub < (1u << w); ++sub) {
          std::vector<int> s0;
          for (int i = 0; i < w; ++i)
            if ((sub >> i) & 1) s0.push_back(i + 1);
          for (int ell = 0; ell <= ell_max && n + 4 * ell <= n_max; ++ell) grid.push_back({w, n, t, s0, ell});
        }
      }
  return grid;
}

CheckReport check_lem_iso(const std::vector<IsoTuple>& grid, const VerifyConfig& cfg) {
  return timed("lem_iso", [&](CheckReport& r) {
    std::vector<std::string> witness(grid.size());
    std::vector<char> good(grid.size(), 0);
    parallel_for(grid.size(), cfg.workers, [&](std::size_t i) {
      const auto& p = grid[i];
      const std::string tag = "W=" + std::to_string(p.window) + " n=" + std::to_string(p.n) + " t=" + std::to_string(p.t) +
                              " S0=" + show(p.s0) + " l=" + std::to_string(p.ell);
      try {
        const auto inst = shift_iso_instance({p.n, p.t, p.window, p.s0, p.ell});
        bool ok = inst.small.size() == inst.large.size() && check_isomorphism_map(inst.small, inst.large, inst.map);
        if (p.ell == 0) ok = ok && inst.small == inst.large;
        if (ok && inst.large.size() <= 32) ok = are_isomorphic(inst.small, inst.large);
        good[i] = ok;
        if (!ok) witness[i] = tag;
      } catch (const std::exception& e) {
        witness[i] = tag + " " + e.what();
      }
    });
    for (std::size_t i = 0; i < grid.size(); ++i) r.expect(good[i] != 0, [&] { return witness[i]; });
  });
}

CheckReport check_single_even_sandwich(int n_max, const VerifyConfig& cfg, int n_min) {
  return timed("single_even_sandwich", [&](CheckReport& r) {
    for (int n = std::max(n_min, 2); n <= n_max; ++n) {
      const SingleEvenCensus c = single_even_census(n, cfg.workers);
      r.expect(c.lower <= static_cast<std::int64_t>(c.f_prime_max) && c.f_prime_max <= c.upper, [&] {
        return "n=" + std::to_string(n) + " lower=" + std::to_string(c.lower) + " f'=" + std::to_string(c.f_prime_max) +
               " upper=" + std::to_string(c.upper);
      });
      const std::uint64_t odd = IntSubset::odds(GroundSet{n}).mask();
      const auto maximal = maximal_masks(n, cfg.workers);
      for (int x = 2; x <= n; x += 2) {
        const Graph g = link_single_even(n, x);
        const std::uint64_t xbit = std::uint64_t{1} << (x - 1);
        for (const auto& ind : enumerate_mis(g)) {
          const std::uint64_t i = label_mask(g, ind);
          for (auto m : maximal) {
            if (!(m & xbit) || (i & ~m)) continue;
            r.expect((m & odd) == i, [&] {
              return "onlyeven n=" + std::to_string(n) + " x=" + std::to_string(x) +
                     " M=" + show(IntSubset::from_mask(GroundSet{n}, m).members());
            });
          }
        }
      }
    }
  });
}

CheckReport check_furedi(int m_max, const VerifyConfig& cfg) {
  return timed("furedi", [&](CheckReport& r) {
    for (int m = 3; m <= m_max; ++m) {
      const Count exact = count_mis(cycle(m));
      r.expect(mis_cycle(m) == exact, [&] { return "C_" + std::to_string(m) + " recurrence value differs from exact"; });
      if (m >= 6) {
        const Count rhs = count_mis(cycle(m - 2)) + count_mis(cycle(m - 3));
        r.expect(exact == rhs, [&] { return "C_" + std::to_string(m) + ": " + std::to_string(exact) + " != " + std::to_string(rhs); });
      }
    }
    for (int m = 4; m <= 64; ++m) {
      const Count v = mis_cycle(m);
      r.expect(std::log2(static_cast<long double>(v)) < 0.49L * m,
               [&] { return "C_" + std::to_string(m) + ": " + std::to_string(v) + " >= 2^{0.49m}"; });
    }
    auto rng = rng_for(cfg, "furedi");
    for (int trial = 0; trial < 100; ++trial) {
      Graph g;
      long double log_count = 0;
      const int parts = std::uniform_int_distribution<int>(1, 5)(rng);
      for (int i = 0; i < parts; ++i) {
        const int len = std::uniform_int_distribution<int>(4, 12)(rng);
        g = disjoint_union(g, cycle(len));
        log_count += std::log2(static_cast<long double>(mis_cycle(len)));
      }
      const Count exact = count_mis(g);
      r.expect(std::fabs(std::log2(static_cast<long double>(exact)) - log_count) < 1e-9L && log_count < 0.49L * g.size(),
               [&] { return "cycle union on " + std::to_string(g.size()) + " vertices"; });
    }
  });
}

CheckReport check_group_mu(int order_max, const VerifyConfig&) {
  return timed("group_mu", [&](CheckReport& r) {
    std::vector<AbelianGroup> groups;
    for (int n = 2; n <= order_max; ++n) groups.emplace_back(std::vector<int>{n});
    for (int a = 2; a * a <= order_max; ++a)
      for (int b = a; a * b <= order_max; b += a) groups.emplace_back(std::vector<int>{a, b});
    for (int k = 3; (1 << k) <= order_max; ++k) groups.emplace_back(std::vector<int>(static_cast<std::size_t>(k), 2));
    if (27 <= order_max) groups.emplace_back(std::vector<int>{3, 3, 3});
    for (const auto& g : groups) {
      const int mu_g = mu(g, std::max(order_max, 36));
      const int n = g.order();
      r.expect(7 * mu_g >= 2 * n && 2 * mu_g <= n, [&] { return g.to_string() + " mu=" + std::to_string(mu_g); });
      const auto& f = g.factors();
      if (std::all_of(f.begin(), f.end(), [](int x) { return x == 2; }))
        r.expect(mu_g == n / 2, [&] { return g.to_string() + " mu=" + std::to_string(mu_g) + " want " + std::to_string(n / 2); });
    }
    for (int k = 1; k <= 4; ++k) {
      const AbelianGroup g(std::vector<int>(static_cast<std::size_t>(k), 2));
      const int v = mu(g);
      r.expect(v == (1 << (k - 1)), [&] { return "mu(Z_2^" + std::to_string(k) + ")=" + std::to_string(v); });
    }
  });
}

CheckReport check_nondec(int trials, int n_max, const VerifyConfig& cfg) {
  return timed("nondec", [&](CheckReport& r) {
    auto rng = rng_for(cfg, "nondec");
    std::map<int, std::vector<std::uint64_t>> cache;
    for (int t = 0; t < trials; ++t) {
      const int n = std::uniform_int_distribution<int>(4, std::max(4, n_max))(rng);
      auto& maximal = cache[n];
      if (maximal.empty()) maximal = maximal_masks(n, cfg.workers);
      const std::uint64_t full = bits_in(1, n);
      const std::uint64_t big = rng() & full;
      const std::uint64_t small = big & rng();
      auto inside = [&](std::uint64_t s) {
        return std::count_if(maximal.begin(), maximal.end(), [s](std::uint64_t m) { return (m & ~s) == 0; });
      };
      const auto a = inside(small), b = inside(big);
      r.expect(a <= b, [&] { return "n=" + std::to_string(n) + " " + std::to_string(a) + " > " + std::to_string(b); });
    }
  });
}

CheckReport check_constructions(const VerifyConfig& cfg) {
  return timed("constructions", [&](CheckReport& r) {
    auto check_family = [&](const Family& f) {
      const FamilyCheck c = verify_family(f, cfg.workers);
      r.expect(c.ok(), [&] {
        std::string w = f.name + " on " + f.ground;
        for (const auto& s : c.failures) w += "; " + s;
        return w;
      });
    };
    for (int n = 4; n <= 18; ++n) check_family(ce_odd_family(n));
    for (int n = 4; n <= 20; n += 4) check_family(interval_family(n));
    for (int k = 2; k <= 4; ++k) {
      const Family f = z2k_family(k);
      check_family(f);
      r.expect(f.members.size() == (std::size_t{1} << ((1 << k) / 4)), [&] { return "z2k k=" + std::to_string(k) + " size"; });
    }
    for (const char* desc : {"Z9", "Z3xZ3", "Z21", "Z27", "Z3xZ9", "Z3xZ21"}) {
      const AbelianGroup g = AbelianGroup::parse(desc);
      const Family f = index3_family(g);
      check_family(f);
      r.expect(std::log2(static_cast<double>(f.members.size())) >= (g.order() - 9) / 6.0 - 1e-9,
               [&] { return std::string("index3 ") + desc + " has " + std::to_string(f.members.size()) + " members"; });
    }
    for (const char* desc : {"Z7", "Z7xZ7"}) {
      const AbelianGroup g = AbelianGroup::parse(desc);
      const Family f = exponent7_family(g);
      check_family(f);
      r.expect(f.members.size() == (std::size_t{1} << (g.order() / 7 - 1)),
               [&] { return std::string("exponent7 ") + desc + " has " + std::to_string(f.members.size()) + " members"; });
    }
    const Graph prism = cartesian_product(complete(3), path(2));
    r.expect(count_mis(prism) == 6, [] { return "MIS(K3 x K2) != 6"; });
    for (int n : {27, 36, 45}) {
      const PrismCensus c = zn_prism_census(n);
      const int others = static_cast<int>(c.other_sizes.size());
      r.expect(others <= 4, [&] { return "Z_" + std::to_string(n) + ": " + std::to_string(others) + " non-prism components"; });
      const double need = (c.window_size / 6 - 2) * std::log2(6.0);
      r.expect(std::log2(static_cast<double>(c.mis)) >= need - 1e-9,
               [&] { return "Z_" + std::to_string(n) + ": MIS=" + std::to_string(c.mis); });
      r.notes.push_back("Z_" + std::to_string(n) + ": |M|=" + std::to_string(c.window_size) + " prisms=" + std::to_string(c.prisms) +
                        " other=" + std::to_string(others) + " MIS=" + std::to_string(c.mis));
    }
  });
}

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = {
      {"lemma_free", "link graphs above a sum-free set are triangle-free",
       [](const VerifyConfig& c) { return check_lemma_free(1000, 40, c); }},
      {"lemma_mis", "upper parts of maximal sets are maximal independent in the link graph",
       [](const VerifyConfig& c) { return check_lemma_mis(20, c); }},
      {"bounds_suite", "MIS upper bounds on structured and random graphs",
       [](const VerifyConfig& c) { return check_bounds_suite(500, 36, c); }},
      {"count_decomposition", "component structure of L_m[O]",
       [](const VerifyConfig& c) { return check_count_decomposition({16, 20, 24, 28, 32, 36, 40, 44, 48}, c); }},
      {"dprime_constants", "sums of MIS(L_m[O]) against their limits",
       [](const VerifyConfig& c) { return check_dprime_constants(40, c); }},
      {"lem_iso", "shift isomorphism of L(n,m,S) on a parameter grid",
       [](const VerifyConfig& c) { return check_lem_iso(lem_iso_grid(), c); }},
      {"single_even_sandwich", "bounds on maximal sets with one even member",
       [](const VerifyConfig& c) { return check_single_even_sandwich(20, c); }},
      {"furedi", "cycle recurrence and the 2^{0.49m} bound", [](const VerifyConfig& c) { return check_furedi(24, c); }},
      {"group_mu", "2|G|/7 <= mu(G) <= |G|/2", [](const VerifyConfig& c) { return check_group_mu(24, c); }},
      {"nondec", "monotonicity of restricted maximal counts", [](const VerifyConfig& c) { return check_nondec(200, 16, c); }},
      {"constructions", "lower-bound families", [](const VerifyConfig& c) { return check_constructions(c); }},
  };
  return reg;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const VerifyConfig& cfg) {
  const auto& reg = check_registry();
  std::vector<const CheckSpec*> specs;
  for (const auto& name : names) {
    auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckSpec& s) { return s.name == name; });
    if (it == reg.end()) throw PreconditionError("unknown check '" + name + "'");
    specs.push_back(&*it);
  }
  std::vector<CheckReport> out(specs.size());
  VerifyConfig inner = cfg;
  if (specs.size() > 1) inner.workers = 1;
  parallel_for(specs.size(), cfg.workers, [&](std::size_t i) { out[i] = specs[i]->run(inner); });
  return out;
}

}  // namespace sumfree
