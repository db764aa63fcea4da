#include <doctest.h>

#include "sumfree/verify.hpp"

using namespace sumfree;

TEST_SUITE("verify") {
  TEST_CASE("individual checks pass at small sizes") {
    CHECK(check_lemma_free(200, 30).passed());
    CHECK(check_lemma_mis(14).passed());
    CHECK(check_bounds_suite(120, 20).passed());
    CHECK(check_count_decomposition({16, 20, 24}).passed());
    CHECK(check_dprime_constants(24).passed());
    CHECK(check_single_even_sandwich(12).passed());
    CHECK(check_furedi(24).passed());
    CHECK(check_group_mu(16).passed());
    CHECK(check_nondec(50, 12).passed());
  }

  TEST_CASE("lem-iso grid") {
    const auto grid = lem_iso_grid();
    CHECK(grid.size() >= 50);
    for (const auto& t : grid) {
      CHECK(t.window <= 3);
      CHECK(t.n + 4 * t.ell <= 96);
      CHECK(t.ell <= 4);
    }
    const auto r = check_lem_iso(grid, {1, 4});
    CHECK(r.passed());
    CHECK(r.instances_checked == static_cast<long long>(grid.size()));
  }

  TEST_CASE("failures carry witnesses") {
    const auto r = check_count_decomposition({18});
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().find("n=18") != std::string::npos);
    CheckReport many;
    for (int i = 0; i < 40; ++i) many.fail("w");
    CHECK(many.failure_count == 40);
    CHECK(many.failures.size() == CheckReport::kMaxWitnesses);
  }

  TEST_CASE("registry and suite") {
    const auto& reg = check_registry();
    CHECK(reg.size() >= 10);
    const auto a = run_checks({"furedi", "nondec", "lemma_free"}, {7, 3});
    const auto b = run_checks({"furedi", "nondec", "lemma_free"}, {7, 1});
    REQUIRE(a.size() == 3);
    CHECK(a[0].name == "furedi");
    CHECK(a[2].name == "lemma_free");
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].instances_checked == b[i].instances_checked);
      CHECK(a[i].failures == b[i].failures);
      CHECK(a[i].notes == b[i].notes);
    }
    CHECK_THROWS_AS(run_checks({"nope"}, {}), PreconditionError);
  }
}
