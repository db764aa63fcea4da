#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "sumfree/linkgraph.hpp"
#include "sumfree/miscount.hpp"

using namespace sumfree;

namespace {
auto int_add = [](int a, int b) { return a + b; };

oracle::LinkEdges expect(std::set<std::pair<int, int>> e, std::set<int> l) { return {std::move(e), std::move(l)}; }
}  // namespace

TEST_SUITE("linkgraph") {
  TEST_CASE("small examples") {
    const GroundSet g7{7};
    CHECK(oracle::edges_of(link_graph(IntSubset(g7, {2}), IntSubset(g7, {5, 7}))) == expect({{5, 7}}, {}));
    CHECK(oracle::edges_of(link_family({8, 2, {}})) == expect({{5, 7}, {6, 8}}, {}));
    CHECK(oracle::edges_of(link_family({16, 4, {}})) == expect({{9, 13}, {10, 14}, {11, 15}, {12, 16}}, {}));
    CHECK(oracle::edges_of(link_family({16, 4, {8}})) == expect({{9, 13}, {10, 14}, {11, 15}, {12, 16}}, {12, 16}));
    CHECK(oracle::edges_of(link_single_even(8, 2)) == expect({{1, 3}, {3, 5}, {5, 7}}, {1}));
  }

  TEST_CASE("rules match the definition on random instances") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 30);
      const GroundSet g{n};
      IntSubset s(g), b(g);
      for (int x = 1; x <= n; ++x) {
        if (rng() % 5 == 0) s.insert(x);
        if (rng() % 2 == 0) b.insert(x);
      }
      const Graph l = link_graph(s, b);
      CHECK(l.labels().size() == static_cast<std::size_t>(b.size()));
      CHECK(oracle::edges_of(l) == oracle::link(s.members(), b.members(), int_add));
    }
  }

  TEST_CASE("group rule matches the definition") {
    std::mt19937 rng(3);
    for (const char* desc : {"Z7", "Z2^3", "Z3xZ6", "Z12"}) {
      const auto g = AbelianGroup::parse(desc);
      auto add = [&](int a, int c) { return g.add(a, c); };
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> s, b;
        for (int i = 0; i < g.order(); ++i) {
          if (rng() % 4 == 0) s.push_back(i);
          if (rng() % 2 == 0) b.push_back(i);
        }
        CHECK(oracle::edges_of(link_graph(GroupSubset(g, s), GroupSubset(g, b))) == oracle::link(s, b, add));
      }
    }
  }

  TEST_CASE("Z2^2 with x = (0,1) on the first-coordinate-1 coset") {
    const AbelianGroup g({2, 2});
    const Graph l = link_graph(GroupSubset(g, {1}), GroupSubset(g, {2, 3}));
    CHECK(l.edge_count() == 1);
    CHECK(l.has_edge(0, 1));
  }

  TEST_CASE("family preconditions") {
    CHECK_THROWS_AS(link_family({16, 9, {}}), PreconditionError);
    CHECK_THROWS_AS(link_family({16, 4, {9}}), PreconditionError);
    CHECK_THROWS_AS(link_single_even(8, 3), PreconditionError);
    CHECK_THROWS_AS(link_pair_even(8, 4, 4), PreconditionError);
  }

  TEST_CASE("families above n/2 are triangle-free") {
    for (int n = 8; n <= 40; n += 3)
      for (int m = 1; m <= n / 2; ++m) CHECK(is_triangle_free(link_family({n, m, {}})));
  }

  TEST_CASE("single-even shapes for n = 24") {
    const Graph g20 = link_single_even(24, 20);
    CHECK(count_mis(g20) == 32);
    CHECK(g20.loop_count() == 0);
    CHECK(g20.edge_count() == 2 * 2 + 3);
    const Graph g18 = link_single_even(24, 18);
    CHECK(count_mis(g18) == 16);
    CHECK(g18.loop_count() == 1);
    CHECK(g18.has_loop(g18.find_label(9)));
    CHECK(g18.edge_count() - 1 == 3 * 2 + 1);
  }

  TEST_CASE("shift isomorphism map") {
    const auto inst = shift_iso_instance({64, 0, 2, {1}, 1});
    CHECK(inst.n_prime == 68);
    CHECK(inst.small.size() == inst.large.size());
    CHECK(check_isomorphism_map(inst.small, inst.large, inst.map));
    const auto three = shift_iso_instance({64, 0, 2, {1}, 3});
    CHECK(three.small.size() == link_family({64, 16, {31}}).size() + 6);
    CHECK(check_isomorphism_map(three.small, three.large, three.map));
    const auto same = shift_iso_instance({64, 1, 2, {1, 2}, 0});
    CHECK(same.small == same.large);
    CHECK_THROWS_AS(shift_iso_instance({32, 0, 2, {1}, 1}), PreconditionError);
    CHECK_THROWS_AS(shift_iso_instance({64, 3, 2, {1}, 1}), PreconditionError);
  }
}
