#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bicross/formulas.hpp"

using namespace bicross;

TEST_CASE("parallel-lines closed form") {
  CHECK(cr_dpl(3, 3) == 9);
  CHECK(cr_dpl(1, 10) == 0);
  CHECK(cr_dpl(14, 8) == 2548);
}

TEST_CASE("three-lines closed form and its minimum") {
  CHECK(cr_tpl(14, 4, 4) == 1092);
  CHECK(cr_tpl(5, 0, 6) == cr_dpl(5, 6));
  CHECK(cr_tpl(2, 2, 2) == 2);

  CHECK(cr_tpl_min(14, 8) == 1092);
  CHECK(cr_tpl_min(9, 1) == 0);
  CHECK(cr_tpl_min(5, 4) == 20);
  CHECK_THROWS_AS(cr_tpl_min(4, 5), std::invalid_argument);

  for (i64 m = 1; m <= 14; ++m) {
    for (i64 n = 1; n <= m; ++n) {
      i64 best = cr_tpl(m, 0, n);
      for (i64 t = 0; t <= n; ++t) best = std::min(best, cr_tpl(m, t, n - t));
      CHECK(cr_tpl_min(m, n) == best);
    }
  }
}

TEST_CASE("orthogonal-lines closed form and extremes") {
  CHECK(cr_dol(0, 9, 9, 0) == 1296);
  CHECK(cr_dol(4, 4, 4, 4) == 144);
  CHECK(cr_dol(1, 1, 1, 1) == 0);

  CHECK(cr_dol_min(8, 8) == 144);
  CHECK(cr_dol_max(9, 9) == 1296);

  for (i64 m = 1; m <= 14; ++m) {
    for (i64 n = 1; n <= 14; ++n) {
      i64 best_min = cr_dol(0, m, 0, n);
      i64 best_max = 0;
      for (i64 l = 0; l <= m; ++l) {
        for (i64 t = 0; t <= n; ++t) {
          const i64 v = cr_dol(l, m - l, t, n - t);
          best_min = std::min(best_min, v);
          best_max = std::max(best_max, v);
        }
      }
      CHECK(cr_dol_min(m, n) == best_min);
      CHECK(cr_dol_max(m, n) == best_max);
      CHECK(cr_dol_min(m, n) == zarankiewicz(m, n));
    }
  }
}

TEST_CASE("chord-in-circle minimum equals the exhaustive split minimum") {
  CHECK(cr_lic_min(20, 18) == 13680);
  CHECK(cr_lic_min(3, 2) == 0);
  for (i64 m = 1; m <= 14; ++m) {
    for (i64 n = 1; n <= m; ++n) {
      i64 best = choose2(m) * choose2(n);
      for (i64 k = 0; k <= n; ++k)
        best = std::min(best, choose2(m) * (choose2(k) + choose2(n - k)));
      CHECK(cr_lic_min(m, n) == best);
    }
  }
  CHECK_THROWS_AS(cr_lic_min(2, 3), std::invalid_argument);
}

TEST_CASE("concentric-circles closed form") {
  CHECK(cr_dc(10, 10) == 900);
  CHECK(cr_dc(9, 1) == 0);
  CHECK(cr_dc(5, 4) == 20);
  CHECK_THROWS_AS(cr_dc(4, 5), std::invalid_argument);
}

TEST_CASE("parity identity") {
  for (i64 k : {i64{0}, i64{5}, i64{8}}) {
    const auto [lhs, rhs] = parity_identity(k);
    CHECK(lhs == rhs);
  }
  CHECK(parity_identity(5).first == 4);
  CHECK(parity_identity(8).first == 12);
  for (i64 k = 0; k <= 20000; ++k) {
    const auto [lhs, rhs] = parity_identity(k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("split-product dominance for ordered part sizes") {
  for (i64 x = 0; x <= 200; ++x) {
    for (i64 y = x; y <= 200; ++y) {
      const i64 lhs = choose2(x) * (y / 2) * ((y - 1) / 2);
      const i64 rhs = choose2(y) * (x / 2) * ((x - 1) / 2);
      CHECK(lhs >= rhs);
    }
  }
}

TEST_CASE("cylindrical crossing number identities") {
  CHECK(cyl_crossing(3, 3) == 3);
  CHECK(cyl_crossing(4, 4) == 16);
  CHECK(cyl_crossing(2, 4) == 2);
  CHECK_THROWS_AS(cyl_crossing(5, 4), std::invalid_argument);
  for (i64 n = 1; n <= 30; ++n) {
    CHECK(cyl_crossing(n, n) == n * (n * (n - 1) * (n - 2) / 6));
  }
  for (i64 m = 1; m <= 30; ++m) {
    for (i64 n = m; n <= 30; n += m) {
      CHECK(cyl_crossing(m, n) == n * (m - 1) * (2 * m * n - 3 * m - n) / 12);
    }
  }
}

TEST_CASE("beta steps") {
  CHECK(beta_step(1, 10, 10, 1.0, 1.05) == 0);
  CHECK(beta_step(4, 10, 10, 1.0, 1.05) == 1);
  CHECK(beta_step(3, 12, 9, 1e-9, 1.0) == 0);
}

TEST_CASE("beta profile brackets its lengths and is monotone up to m/2") {
  for (i64 m : {i64{7}, i64{10}, i64{13}}) {
    for (i64 n : {i64{6}, i64{9}}) {
      const BetaProfile profile = beta_profile(m, n, 0.9, 1.0);
      const double chord = 2.0 * std::sin(std::numbers::pi / static_cast<double>(n));
      for (std::size_t i = 0; i < profile.betas.size(); ++i) {
        const double d = profile.d_values[i];
        const double b = static_cast<double>(profile.betas[i]);
        if (!profile.ambiguous[i]) {
          CHECK(b * chord <= d + 1e-12);
          CHECK(d < (b + 1.0) * chord + 1e-12);
        }
        if (i > 0 && profile.j_values[i] <= m / 2)
          CHECK(profile.betas[i] >= profile.betas[i - 1]);
      }
    }
  }
}

TEST_CASE("beta profile flags ratios at floor boundaries") {
  // r chosen so the class-2 length r*sin(2 pi/8) equals one outer chord up
  // to rounding; the floor there is unreliable and must be flagged.
  const double chord = 2.0 * std::sin(std::numbers::pi / 12.0);
  const double r = chord / std::sin(std::numbers::pi / 4.0);
  const BetaProfile profile = beta_profile(8, 12, r, 1.0);
  REQUIRE(profile.j_values.size() == 3);
  CHECK(profile.ambiguous[1]);
  CHECK_FALSE(profile.ambiguous[0]);

  // Away from boundaries nothing is flagged.
  const BetaProfile clean = beta_profile(10, 10, 1.0, 1.05);
  for (bool flag : clean.ambiguous) CHECK_FALSE(flag);
}

TEST_CASE("excess bounds: merged gadget equals the per-parity derivation") {
  for (i64 m : {i64{5}, i64{8}, i64{10}, i64{13}}) {
    for (i64 n : {i64{4}, i64{7}, i64{10}}) {
      if (m < n) continue;
      for (double r : {0.2, 0.5, 0.8, 0.95}) {
        const ExcessBounds merged = excess_bounds(m, n, r, 1.0);
        const BetaProfile profile = beta_profile(m, n, r, 1.0);
        // Per-line excess with shift c*beta: even n gives (c b)^2, odd n
        // gives c b + (c b)^2; c = 1 for the lower bound, 2 for the upper.
        i64 lower = 0;
        i64 upper = 0;
        for (i64 b : profile.betas) {
          if (n % 2 == 0) {
            lower += b * b;
            upper += 4 * b * b;
          } else {
            lower += b + b * b;
            upper += 2 * b + 4 * b * b;
          }
        }
        CHECK(merged.lower == m * lower);
        CHECK(merged.upper == m * upper);
        CHECK(merged.lower <= merged.upper);
      }
    }
  }
}

TEST_CASE("excess bounds match the worked example") {
  const ExcessBounds bounds = excess_bounds(10, 10, 1.0, 1.05);
  CHECK(bounds.lower == 20);
  CHECK(bounds.upper == 80);
  const ExcessBounds tiny = excess_bounds(10, 10, 1e-6, 1.0);
  CHECK(tiny.lower == 0);
  CHECK(tiny.upper == 0);
}
