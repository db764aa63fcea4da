#include <doctest.h>

#include "../oracle.hpp"
#include "sumfree/setcore.hpp"

using namespace sumfree;

TEST_SUITE("setcore") {
  TEST_CASE("ground set and subsets") {
    CHECK_THROWS_AS(GroundSet(0), PreconditionError);
    IntSubset s(GroundSet{10}, {1, 5, 10});
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(11));
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<int>{1, 5, 10});
    CHECK(*s.min() == 1);
    CHECK(*s.max() == 10);
    CHECK_THROWS_AS(s.insert(11), PreconditionError);
    CHECK(IntSubset::odds(GroundSet{7}).members() == std::vector<int>{1, 3, 5, 7});
    CHECK(IntSubset::evens(GroundSet{7}).members() == std::vector<int>{2, 4, 6});
    CHECK(IntSubset::interval(GroundSet{9}, 5, 9).size() == 5);
    CHECK(IntSubset::from_mask(GroundSet{4}, 0b1010).members() == std::vector<int>{2, 4});
  }

  TEST_CASE("large grounds use several words") {
    IntSubset s(GroundSet{200}, {1, 64, 66, 200});
    CHECK(s.members() == std::vector<int>{1, 64, 66, 200});
    CHECK(is_sum_free(s));
    s.insert(130);
    CHECK_FALSE(is_sum_free(s));
  }

  TEST_CASE("canonical order is lexicographic on members") {
    const GroundSet g{6};
    CHECK(IntSubset(g, {1, 5}) < IntSubset(g, {2}));
    CHECK(IntSubset(g, {1}) < IntSubset(g, {1, 2}));
    CHECK(IntSubset(g) < IntSubset(g, {1}));
  }

  TEST_CASE("schur triples") {
    CHECK(is_schur_triple(1, 1, 2));
    CHECK(is_schur_triple(2, 3, 5));
    CHECK_FALSE(is_schur_triple(2, 3, 6));
    CHECK(unordered_schur(5, 3, 2));
    CHECK(unordered_schur(4, 2, 2));
    CHECK_FALSE(unordered_schur(7, 2, 3));
  }

  TEST_CASE("sum-free examples") {
    CHECK(is_sum_free(IntSubset::odds(GroundSet{10})));
    CHECK(is_sum_free(IntSubset::interval(GroundSet{10}, 6, 10)));
    CHECK_FALSE(is_sum_free(IntSubset(GroundSet{10}, {1, 2})));
  }

  TEST_CASE("addable elements") {
    CHECK(addable_elements(IntSubset(GroundSet{4}, {2, 3})).empty());
    CHECK(addable_elements(IntSubset(GroundSet{3})).members() == std::vector<int>{1, 2, 3});
    CHECK(addable_elements(IntSubset(GroundSet{4}, {1, 3})).empty());
    CHECK_THROWS_AS(addable_elements(IntSubset(GroundSet{4}, {1, 2})), PreconditionError);
  }

  TEST_CASE("maximality examples") {
    CHECK(is_maximal_sum_free(IntSubset(GroundSet{4}, {1, 4})));
    CHECK_FALSE(is_maximal_sum_free(IntSubset(GroundSet{4}, {2})));
    CHECK_FALSE(is_maximal_sum_free(IntSubset(GroundSet{1})));
  }

  TEST_CASE("schur triple count matches triple enumeration") {
    // (1,1,2), (1,2,3), (1,3,4), (2,2,4)
    CHECK(schur_triple_count(IntSubset::full(GroundSet{4})) == 4);
    CHECK(oracle::schur_triples({1, 2, 3, 4}) == 4);
    CHECK(schur_triple_count(IntSubset::odds(GroundSet{9})) == 0);
    CHECK(schur_triple_count(IntSubset(GroundSet{5})) == 0);
    for (std::uint64_t m = 0; m < 1024; m += 7) {
      const auto s = IntSubset::from_mask(GroundSet{10}, m);
      CHECK(schur_triple_count(s) == oracle::schur_triples(s.members()));
    }
  }

  TEST_CASE("sumset") {
    CHECK(sumset(IntSubset(GroundSet{10}, {1, 2}), IntSubset(GroundSet{10}, {10})) == std::vector<int>{11, 12});
    CHECK(sumset(IntSubset(GroundSet{10}), IntSubset::full(GroundSet{10})).empty());
    const IntSubset a(GroundSet{5}, {1, 3});
    CHECK(sumset(a, a) == std::vector<int>{2, 4, 6});
  }

  TEST_CASE("predicates agree with the oracle on [12]") {
    const GroundSet g{12};
    for (std::uint64_t m = 0; m < (1u << 12); ++m) {
      const auto s = IntSubset::from_mask(g, m);
      const auto mem = s.members();
      REQUIRE(is_sum_free(s) == oracle::sum_free(mem));
      REQUIRE(is_maximal_sum_free(s) == oracle::maximal_sum_free(mem, 12));
    }
  }

  TEST_CASE("stats") {
    const auto st = stats(IntSubset(GroundSet{9}, {3, 4, 8}));
    CHECK(*st.min == 3);
    CHECK(*st.min2 == 4);
    CHECK(*st.max == 8);
    CHECK(st.even_count == 2);
    CHECK(st.size == 3);
  }
}
