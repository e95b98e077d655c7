#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "bicross/bounds.hpp"
#include "bicross/threshold.hpp"

using namespace bicross;

TEST_CASE("threshold bisection certifies its bracket") {
  for (auto [m, n] : {std::pair<i64, i64>{4, 4}, {6, 5}}) {
    const ThresholdResult res = crossing_threshold(m, n, 1.0);
    INFO("m=" << m << " n=" << n);
    CHECK_FALSE(res.hit_upper_limit);
    CHECK(res.bracket_hi - res.bracket_lo <= 1e-10);
    CHECK(res.t_cr == res.bracket_lo);
    CHECK(res.witness.first >= 0);

    // The bracket ends sit ~1e-10 from the transition, inside the default
    // 1e-9 tie zone; certify with the solver's own tolerance.
    const double solver_eps = ThresholdConfig{}.eps_geom;
    const DCParams below{m, n, res.bracket_lo, 1.0, res.phi_in, res.phi_out};
    const DCParams above{m, n, res.bracket_hi, 1.0, res.phi_in, res.phi_out};
    CHECK(is_min_crossing_config(below, solver_eps));
    CHECK_FALSE(is_min_crossing_config(above, solver_eps));

    const DCParams well_below{m, n, 0.99 * res.bracket_lo, 1.0, res.phi_in, res.phi_out};
    const DCParams well_above{m, n, 1.01 * res.bracket_hi, 1.0, res.phi_in, res.phi_out};
    CHECK(count_crossings_brute(gen_dc(well_below)).count == cr_dc(m, n));
    CHECK(count_crossings_brute(gen_dc(well_above)).count > cr_dc(m, n));
  }
}

TEST_CASE("threshold scales linearly with the outer radius") {
  const ThresholdResult base = crossing_threshold(4, 4, 1.0);
  for (double lambda : {0.5, 2.0, 10.0}) {
    const ThresholdResult scaled = crossing_threshold(4, 4, lambda);
    CHECK(std::abs(scaled.t_cr - lambda * base.t_cr) <= 1e-9 * lambda * base.t_cr);
  }
}

TEST_CASE("threshold argument contract") {
  CHECK_THROWS_AS(crossing_threshold(3, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(crossing_threshold(4, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(crossing_threshold(4, 4, -1.0), std::invalid_argument);
}

TEST_CASE("two antipodal inner vertices stay balanced for every radius") {
  // The single chord is a diameter, so the predicate never turns false below
  // the probe ceiling.
  const ThresholdResult res = crossing_threshold(2, 2, 1.0);
  CHECK(res.hit_upper_limit);
  CHECK(res.t_cr >= 0.99);
}

TEST_CASE("chord class statistics below the threshold") {
  const DCParams params = DCParams::with_default_rotation(10, 10, 0.05, 1.0);
  const auto stats = line_class_stats(params);
  REQUIRE(stats.size() == 5);  // j = 1..4 plus the diameter class
  i64 chords = 0;
  for (const auto& rec : stats) {
    CHECK(rec.side_u + rec.side_l == 10);
    CHECK(rec.side_u - rec.side_l <= 1);
    CHECK(rec.beta == 0);
    CHECK((rec.parallel_case == 1 || rec.parallel_case == 2));
    chords += rec.member_count;
  }
  CHECK(chords == choose2(10));
  CHECK(stats.back().class_index == 5);
  CHECK(stats.back().member_count == 5);
  CHECK(stats.back().side_u == 5);
  CHECK(stats.back().side_l == 5);
}

TEST_CASE("chord class statistics above the threshold") {
  const DCParams params = DCParams::with_default_rotation(10, 10, 1.0, 1.05);
  const auto stats = line_class_stats(params);
  REQUIRE(stats.size() == 5);
  // Measured chord distance is r cos(j pi / m): largest for adjacent
  // endpoints, zero for diameters.
  for (const auto& rec : stats) {
    const double expected =
        rec.class_index == 5
            ? 0.0
            : 1.0 * std::cos(static_cast<double>(rec.class_index) * std::numbers::pi / 10.0);
    CHECK(std::abs(rec.line_distance - expected) <= 1e-9);
  }
  bool any_shifted = false;
  for (const auto& rec : stats)
    if (rec.side_u - rec.side_l > 1) any_shifted = true;
  CHECK(any_shifted);
  // The diameter class stays balanced at every radius.
  CHECK(stats.back().side_u == 5);
  CHECK(stats.back().side_l == 5);
}

TEST_CASE("odd inner counts have no diameter class") {
  const auto stats = line_class_stats(DCParams::with_default_rotation(5, 5, 0.2, 1.0));
  REQUIRE(stats.size() == 2);
  i64 chords = 0;
  for (const auto& rec : stats) chords += rec.member_count;
  CHECK(chords == choose2(5));
}

TEST_CASE("class counts account for every inner pair") {
  for (i64 m = 2; m <= 1000; ++m) {
    const i64 regular = m * ((m + 1) / 2 - 1);
    const i64 diameter = (m % 2 == 0) ? m / 2 : 0;
    CHECK(regular + diameter == choose2(m));
  }
}
