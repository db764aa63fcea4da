#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "../oracle.hpp"
#include "sumfree/constructions.hpp"
#include "sumfree/miscount.hpp"

using namespace sumfree;

TEST_SUITE("constructions") {
  TEST_CASE("ce_odd family") {
    const Family f = ce_odd_family(8);
    auto sorted = f.members;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::vector<int>>{{1, 3, 8}, {1, 5, 8}, {3, 7, 8}, {5, 7, 8}});
    for (int n = 4; n <= 18; ++n) {
      const Family g = ce_odd_family(n);
      const int m = n % 2 == 0 ? n : n - 1;
      int pairs = 0;
      for (int x = 1; 2 * x < m; x += 2) ++pairs;
      CHECK(g.members.size() == (std::size_t{1} << pairs));
      CHECK(std::log2(static_cast<double>(g.members.size())) >= n / 4 - 1);
      for (const auto& s : g.members) CHECK(oracle::sum_free(s));
      CAPTURE(n);
      CHECK(verify_family(g).ok());
    }
    CHECK_THROWS_AS(ce_odd_family(3), PreconditionError);
  }

  TEST_CASE("interval family") {
    const Family f = interval_family(8);
    CHECK(f.members.size() == 4);
    CHECK(f.members.front() == std::vector<int>{2, 5, 6});
    for (int n : {8, 12, 16, 20}) {
      const Family g = interval_family(n);
      CHECK(g.members.size() == (std::size_t{1} << (n / 4)));
      for (const auto& s : g.members) {
        CHECK(oracle::contains(s, n / 4));
        CHECK(oracle::sum_free(s));
      }
      const auto check = verify_family(g);
      CHECK(check.ok());
      CHECK(check.closures_distinct.has_value() == (n <= 18));
    }
    CHECK_THROWS_AS(interval_family(10), PreconditionError);
  }

  TEST_CASE("z2k family") {
    CHECK(z2k_family(2).members.size() == 2);
    CHECK(z2k_family(3).members.size() == 4);
    CHECK(z2k_family(4).members.size() == 16);
    for (int k = 2; k <= 5; ++k) CHECK(verify_family(z2k_family(k)).ok());
    CHECK_THROWS_AS(z2k_family(1), PreconditionError);
  }

  TEST_CASE("index-3 family") {
    const Family z9 = index3_family(AbelianGroup({9}));
    CHECK(z9.members.size() >= 1);
    CHECK(verify_family(z9).ok());
    const Family z21 = index3_family(AbelianGroup({21}));
    CHECK(z21.members.size() >= 4);
    CHECK(verify_family(z21).ok());
    CHECK_THROWS_AS(index3_family(AbelianGroup({6})), PreconditionError);
    CHECK_THROWS_AS(index3_family(AbelianGroup({5})), PreconditionError);
  }

  TEST_CASE("exponent-7 family") {
    const Family z7 = exponent7_family(AbelianGroup({7}));
    CHECK(z7.members == std::vector<std::vector<int>>{{1, 3}});
    const Family big = exponent7_family(AbelianGroup({7, 7}));
    CHECK(big.members.size() == 64);
    CHECK(big.window.size() == 14);
    CHECK(verify_family(big, 4).ok());
    CHECK_THROWS_AS(exponent7_family(AbelianGroup({14})), PreconditionError);
  }

  TEST_CASE("prism census") {
    CHECK(count_mis(cartesian_product(complete(3), path(2))) == 6);
    for (int n : {27, 36, 45}) {
      const auto c = zn_prism_census(n);
      CHECK(c.window_size == 3 * (n / 9));
      CHECK(c.components == c.prisms + static_cast<int>(c.other_sizes.size()));
      CHECK(std::log2(static_cast<double>(c.mis)) >= (c.window_size / 6 - 2) * std::log2(6.0));
    }
    const auto big = zn_prism_census(9 * 20 + 4);
    CHECK(big.prisms >= big.window_size / 6 - 4);
    CHECK_THROWS_AS(zn_prism_graph(8), PreconditionError);
  }

  TEST_CASE("verifier catches a bad family") {
    Family f = interval_family(8);
    f.members.push_back({1, 2});
    f.claimed_size = 5;
    const auto check = verify_family(f);
    CHECK_FALSE(check.ok());
    CHECK_FALSE(check.sum_free);
    Family g = ce_odd_family(8);
    g.members.push_back(g.members.front());
    CHECK_FALSE(verify_family(g).distinct);
  }
}
