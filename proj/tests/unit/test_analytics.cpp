#include <doctest.h>

#include "multiswap/analytics.hpp"
#include "multiswap/errors.hpp"

using namespace multiswap;

TEST_CASE("precision model") {
  const auto p = precision(8, 8192);
  CHECK(p.n == 8);
  CHECK(p.m1 == doctest::Approx(2.0 * 8192 / 56));
  CHECK(p.m2 == doctest::Approx(8192.0 / 7));
  CHECK(p.ratio == doctest::Approx(4.0));
  for (std::size_t n = 4; n <= 1024; n *= 2) CHECK(precision(n, 1000).ratio == doctest::Approx(n / 2.0));

  const auto padded = precision(5, 8192);
  CHECK(padded.requested_n == 5);
  CHECK(padded.n == 8);
  CHECK(padded.ratio == doctest::Approx(4.0));
  CHECK(precision(2, 100).n == 2);
  CHECK_THROWS_AS(precision(1, 100), ConfigError);
  CHECK_THROWS_AS(precision(8, 0), ConfigError);
}

TEST_CASE("resource report") {
  const auto rows = resource_report(6, 64);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().n == 4);
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CHECK(r.measured_matches_closed_form());
    CHECK(r.new_cswap_measured.has_value());
    CHECK(*r.new_cswap_with_tests_measured == r.new_cswap + r.n / 2);
    CHECK(r.new_ancilla == r.printed_new_ancilla);
    CHECK(r.precision_ratio == doctest::Approx(r.n / 2.0));
  }
  CHECK(rows[1].new_cswap == 8);
  CHECK(rows[1].san_cswap == 9);
  CHECK(rows[1].printed_new_cswap == 24);
  CHECK(rows[1].printed_formula_mismatch);

  const auto wide = resource_report(12, 64);
  CHECK_FALSE(wide.back().new_cswap_measured.has_value());
  CHECK(wide.back().new_cswap == 11 * 2048);
}

TEST_CASE("scatter data") {
  std::vector<OverlapEstimate> est{
      {{1, 2}, 0.5, 0.6, 100, 0.1},
      {{1, 3}, 0.2, 0.1, 100, 0.1},
      {{2, 3}, 0.3, std::nullopt, 0, std::nullopt},
  };
  const auto s = scatter_data(est);
  CHECK(s.rows.size() == 2);
  CHECK(s.unsampled == 1);
  CHECK(s.max_abs_error == doctest::Approx(0.1));
  CHECK(s.rmse == doctest::Approx(0.1));
  CHECK(s.rows[0].estimate == doctest::Approx(0.6));
  CHECK(s.rows[0].exact == doctest::Approx(0.5));
}
