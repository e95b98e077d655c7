#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>

#include "bicross/arrangements.hpp"
#include "bicross/formulas.hpp"
#include "bicross/geometry.hpp"

using namespace bicross;

namespace {

bool bit_identical(const Layout& a, const Layout& b) {
  if (a.part_a.size() != b.part_a.size() || a.part_b.size() != b.part_b.size()) return false;
  auto same = [](const std::vector<Point2>& x, const std::vector<Point2>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::memcmp(&x[i].x, &y[i].x, sizeof(double)) != 0) return false;
      if (std::memcmp(&x[i].y, &y[i].y, sizeof(double)) != 0) return false;
    }
    return true;
  };
  return same(a.part_a, b.part_a) && same(a.part_b, b.part_b);
}

}  // namespace

TEST_CASE("parallel-lines generator matches the closed form") {
  CHECK(count_crossings_brute(gen_dpl(2, 2)).count == 1);
  CHECK(count_crossings_brute(gen_dpl(1, 5)).count == 0);
  CHECK(count_crossings_brute(gen_dpl(14, 8)).count == 2548);
}

TEST_CASE("three-lines generator matches the closed form") {
  CHECK(count_crossings_brute(gen_tpl(4, 14, 4)).count == 1092);
  CHECK(count_crossings_brute(gen_tpl(1, 2, 1)).count == 0);
  SECTION("one-sided split degenerates to two parallel lines") {
    CHECK(count_crossings_brute(gen_tpl(0, 5, 6)).count ==
          count_crossings_brute(gen_dpl(5, 6)).count);
    CHECK(count_crossings_brute(gen_tpl(0, 5, 6)).count == cr_dpl(5, 6));
  }
}

TEST_CASE("orthogonal-lines generator matches the closed form") {
  CHECK(count_crossings_brute(gen_dol(0, 9, 9, 0)).count == 1296);
  CHECK(count_crossings_brute(gen_dol(4, 4, 4, 4)).count == 144);
  CHECK(count_crossings_brute(gen_dol(1, 0, 1, 0)).count == 0);
}

TEST_CASE("chord-in-circle generator") {
  CHECK(count_crossings_brute(gen_lic(20, 9, 9)).count == 13680);
  CHECK(count_crossings_brute(gen_lic(4, 5, 0)).count == cr_dpl(4, 5));
  CHECK(count_crossings_brute(gen_lic(1, 3, 4)).count == 0);

  SECTION("the chord realizes the requested split") {
    for (i64 k = 0; k <= 7; ++k) {
      const Layout layout = gen_lic(3, k, 7 - k);
      REQUIRE(layout.part_a.size() == 3);
      // Chord direction from the two extreme collinear points.
      const Point2 p0 = layout.part_a.front();
      const Point2 p1 = layout.part_a.back();
      i64 above = 0;
      for (const Point2& q : layout.part_b)
        if (orientation(p0, p1, q) > 0) ++above;
      CHECK((above == k || above == 7 - k));
    }
  }
}

TEST_CASE("concentric-circles generator") {
  const DCParams params = DCParams::with_default_rotation(10, 10, 0.3, 1.0);
  const Layout layout = gen_dc(params);
  REQUIRE(layout.part_a.size() == 10);
  REQUIRE(layout.part_b.size() == 10);
  for (const Point2& p : layout.part_a)
    CHECK(std::abs(std::hypot(p.x, p.y) - 0.3) <= 1e-12 * 0.3);
  for (const Point2& p : layout.part_b) CHECK(std::abs(std::hypot(p.x, p.y) - 1.0) <= 1e-12);

  CHECK(count_crossings_brute(gen_dc(DCParams::with_default_rotation(2, 2, 0.01, 1.0))).count ==
        0);
  CHECK(count_crossings_brute(gen_dc(DCParams::with_default_rotation(3, 3, 0.01, 1.0))).count ==
        3);

  CHECK_THROWS_AS(gen_dc(DCParams{4, 4, 1.5, 1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
  CHECK(bit_identical(gen_dpl(6, 7), gen_dpl(6, 7)));
  CHECK(bit_identical(gen_dc(DCParams::with_default_rotation(9, 6, 0.4, 1.0)),
                      gen_dc(DCParams::with_default_rotation(9, 6, 0.4, 1.0))));
  CHECK(bit_identical(gen_fic(5, 6, 1.0, 42), gen_fic(5, 6, 1.0, 42)));
  CHECK_FALSE(bit_identical(gen_fic(5, 6, 1.0, 42), gen_fic(5, 6, 1.0, 43)));
}

TEST_CASE("random-in-circle generator") {
  const Layout layout = gen_fic(6, 5, 1.0, 7);
  REQUIRE(layout.part_a.size() == 6);
  for (const Point2& p : layout.part_a) CHECK(std::hypot(p.x, p.y) < 1.0);
  CHECK(count_crossings_brute(gen_fic(1, 8, 1.0, 3)).count == 0);
}

TEST_CASE("jittered generation reports the effective rotation") {
  // phi_out = 0 puts an outer vertex on the line through two antipodal inner
  // vertices; the jittered variant must rotate away from it.
  DCParams params{2, 4, 0.2, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(gen_dc(params), DegenerateLayout);
  const auto [layout, effective] = gen_dc_jittered(params);
  CHECK(effective.phi_out > 0.0);
  CHECK(layout.part_a.size() + layout.part_b.size() == 6);
}
