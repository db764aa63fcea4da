#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracle.hpp"
#include "sumfree/miscount.hpp"

using namespace sumfree;

namespace {

Graph random_graph(int n, double p, double loop_p, std::mt19937_64& rng) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = 100 - i;
  Graph g(labels);
  std::bernoulli_distribution e(p), l(loop_p);
  for (int u = 0; u < n; ++u) {
    if (l(rng)) g.add_edge(u, u);
    for (int v = u + 1; v < n; ++v)
      if (e(rng)) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_SUITE("miscount") {
  TEST_CASE("strip loops") {
    Graph p3 = path(3);
    p3.add_edge(0, 0);
    const Graph s = strip_loops(p3);
    CHECK(s.size() == 2);
    CHECK(s.edge_count() == 1);
    CHECK(strip_loops(cycle(5)) == cycle(5));
    Graph loops(std::vector<std::int64_t>{1, 2});
    loops.add_edge(0, 0);
    loops.add_edge(1, 1);
    CHECK(strip_loops(loops).size() == 0);
    CHECK(count_mis(loops) == 1);
  }

  TEST_CASE("counts") {
    CHECK(count_mis(cycle(4)) == 2);
    CHECK(oracle::mis(cycle(4)).size() == 2);
    CHECK(count_mis(cartesian_product(complete(3), path(2))) == 6);
    for (int k = 0; k <= 20; ++k) CHECK(count_mis(matching(k)) == (Count{1} << k));
    CHECK(count_mis(Graph()) == 1);
  }

  TEST_CASE("enumeration") {
    Graph p3(std::vector<std::int64_t>{1, 2, 3});
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(enumerate_mis(p3) == std::vector<std::vector<int>>{{0, 2}, {1}});
    Graph loop(std::vector<std::int64_t>{4});
    loop.add_edge(0, 0);
    CHECK(enumerate_mis(loop) == std::vector<std::vector<int>>{{}});
    const auto c5 = enumerate_mis(cycle(5));
    CHECK(c5.size() == 5);
    for (const auto& s : c5) CHECK(s.size() == 2);
    MisOptions small;
    small.enum_cap = 4;
    CHECK_THROWS_AS(enumerate_mis(cycle(5), small), LimitExceeded);
  }

  TEST_CASE("order follows labels") {
    Graph g(std::vector<std::int64_t>{30, 10, 20});
    g.add_edge(1, 2);
    const auto sets = enumerate_mis(g);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == std::vector<int>{1, 0});
    CHECK(sets[1] == std::vector<int>{2, 0});
  }

  TEST_CASE("agrees with brute force on random graphs with loops") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = static_cast<int>(rng() % 15);
      const Graph g = random_graph(n, 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0, 0.15, rng);
      auto want = oracle::mis(g);
      std::sort(want.begin(), want.end());
      REQUIRE(count_mis(g) == want.size());
      auto got = enumerate_mis(g);
      for (auto& s : got) std::sort(s.begin(), s.end());
      std::sort(got.begin(), got.end());
      CHECK(got == want);
      CHECK(count_mis(g) == count_mis(strip_loops(g)));
      CHECK(count_mis(g) <= count_mis(remove_loops(g)));
    }
  }

  TEST_CASE("multiplies over components") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph a = random_graph(8, 0.3, 0.1, rng), b = random_graph(9, 0.2, 0.1, rng);
      CHECK(count_mis(disjoint_union(a, b)) == count_mis(a) * count_mis(b));
    }
  }

  TEST_CASE("vertex limit") {
    CHECK_THROWS_AS(count_mis(matching(41)), LimitExceeded);
    MisOptions wide;
    wide.vertex_limit = 128;
    CHECK(count_mis(matching(60), wide) == (Count{1} << 60));
    Graph loopy = matching(41);
    for (int v = 0; v < 10; ++v) loopy.add_edge(v, v);
    CHECK(count_mis(loopy) == (Count{1} << 36));
  }

  TEST_CASE("cycles") {
    CHECK(mis_cycle(4) == 2);
    CHECK(mis_cycle(5) == 5);
    CHECK(mis_cycle(6) == 5);
    CHECK_THROWS_AS(mis_cycle(2), PreconditionError);
    for (int m = 3; m <= 24; ++m) CHECK(mis_cycle(m) == count_mis(cycle(m)));
    for (int m = 4; m <= 64; ++m) CHECK(std::log2(static_cast<double>(mis_cycle(m))) < 0.49 * m);
  }

  TEST_CASE("bound certificates") {
    const auto c5 = bound_certificates(cycle(5));
    CHECK(c5.exact == 5);
    CHECK(c5.all_hold());
    CHECK(c5.checks[0].name == "moon_moser");
    CHECK(c5.checks[0].bound_log2 == doctest::Approx(5.0 / 3.0 * std::log2(3.0)));

    const auto m4 = bound_certificates(matching(4));
    const auto ht = std::find_if(m4.checks.begin(), m4.checks.end(), [](const BoundCheck& c) { return c.name == "hujter_tuza"; });
    REQUIRE(ht != m4.checks.end());
    CHECK(ht->applicable);
    CHECK(ht->bound_log2 == doctest::Approx(4.0));
    CHECK(ht->holds);

    Graph p3s;
    for (int i = 0; i < 3; ++i) p3s = disjoint_union(p3s, path(3));
    const auto r = bound_certificates(p3s);
    CHECK(r.exact == 8);
    const auto p = std::find_if(r.checks.begin(), r.checks.end(), [](const BoundCheck& c) { return c.name == "disjoint_p3"; });
    REQUIRE(p != r.checks.end());
    CHECK(p->bound_log2 == doctest::Approx(4.5 - 3.0 / 25.0));
    CHECK(p->holds);

    const auto k4 = bound_certificates(complete(4));
    for (const auto& c : k4.checks)
      if (c.name == "hujter_tuza" || c.name == "dense" || c.name == "disjoint_p3") CHECK_FALSE(c.applicable);
  }

  TEST_CASE("log2 comparison") {
    CHECK(within_log2_bound(16, 4.0));
    CHECK_FALSE(within_log2_bound(17, 4.0));
    CHECK(within_log2_bound(0, -5.0));
  }
}
