#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicross {

using i64 = std::int64_t;

inline constexpr i64 choose2(i64 k) { return k >= 2 ? k * (k - 1) / 2 : 0; }

/// floor(m/2) floor((m-1)/2) floor(n/2) floor((n-1)/2), the conjectured
/// crossing number of K_{m,n}.
inline constexpr i64 zarankiewicz(i64 m, i64 n) {
  return (m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2);
}

namespace detail {

inline void require_order(i64 m, i64 n, const char* what) {
  if (m < n) {
    throw std::invalid_argument(std::string(what) +
                                ": requires m >= n (pass the larger part first)");
  }
}

}  // namespace detail

/// Crossings of K_{m,n} with the parts on two parallel lines.
inline i64 cr_dpl(i64 m, i64 n) { return choose2(m) * choose2(n); }

/// Crossings with c vertices on a center line and t / b vertices on lines
/// above and below it.
inline i64 cr_tpl(i64 c, i64 t, i64 b) { return choose2(c) * (choose2(t) + choose2(b)); }

/// Minimum of cr_tpl over all top/bottom splits of n, larger part centered.
inline i64 cr_tpl_min(i64 m, i64 n) {
  detail::require_order(m, n, "cr_tpl_min");
  return choose2(m) * (n / 2) * ((n - 1) / 2);
}

/// Crossings with the parts on two orthogonal lines split (l, r) and (t, b)
/// around the intersection.
inline i64 cr_dol(i64 l, i64 r, i64 t, i64 b) {
  return (choose2(l) + choose2(r)) * (choose2(t) + choose2(b));
}

inline i64 cr_dol_min(i64 m, i64 n) { return zarankiewicz(m, n); }

inline i64 cr_dol_max(i64 m, i64 n) { return choose2(m) * choose2(n); }

/// Minimum crossings with m collinear vertices on a chord of the circle
/// holding the other n.
inline i64 cr_lic_min(i64 m, i64 n) {
  detail::require_order(m, n, "cr_lic_min");
  return choose2(m) * (n / 2) * ((n - 1) / 2);
}

/// Crossing number of the concentric-circles arrangement, larger part on the
/// inner circle.
inline i64 cr_dc(i64 m, i64 n) {
  detail::require_order(m, n, "cr_dc");
  return choose2(m) * (n / 2) * ((n - 1) / 2);
}

/// Both sides of the identity C(floor(k/2),2) + C(ceil(k/2),2)
/// = floor(k/2) * floor((k-1)/2); they are equal for every k >= 0.
inline std::pair<i64, i64> parity_identity(i64 k) {
  const i64 lhs = choose2(k / 2) + choose2((k + 1) / 2);
  const i64 rhs = (k / 2) * ((k - 1) / 2);
  return {lhs, rhs};
}

/// Bipartite cylindrical crossing number of K_{m,n} (curved edges around two
/// concentric circles), m <= n. Reference value only; this artifact draws
/// straight edges.
inline i64 cyl_crossing(i64 m, i64 n) {
  if (m > n) throw std::invalid_argument("cyl_crossing: requires m <= n");
  auto f = [&](i64 j) { return (n * (j - 1)) / m; };
  i64 sum_sq = 0;
  i64 sum_lin = 0;
  for (i64 i = 1; i <= m; ++i) {
    for (i64 j = i; j <= m; ++j) {
      const i64 d = f(j) - f(i);
      sum_sq += d * d;
      sum_lin += d;
    }
  }
  return choose2(n) * choose2(m) + sum_sq - n * sum_lin;
}

/// Integer number of outer-chord widths D = 2 R sin(pi/n) spanned by
/// r sin(j pi / m). Classes of inner-polygon chords are indexed by the step
/// j between their endpoints.
inline i64 beta_step(i64 j, i64 m, i64 n, double r, double R) {
  const double ratio =
      r * std::sin(static_cast<double>(j) * std::numbers::pi / static_cast<double>(m)) /
      (2.0 * R * std::sin(std::numbers::pi / static_cast<double>(n)));
  return static_cast<i64>(std::floor(ratio));
}

/// Per-class beta values for j = 1 .. ceil(m/2)-1 together with the raw
/// lengths they floor. `ambiguous` marks ratios within 1e-9 of an integer,
/// where the floor is numerically unreliable.
struct BetaProfile {
  std::vector<i64> j_values;
  std::vector<i64> betas;
  std::vector<double> d_values;
  std::vector<bool> ambiguous;
};

inline BetaProfile beta_profile(i64 m, i64 n, double r, double R) {
  BetaProfile profile;
  const i64 j_max = (m + 1) / 2 - 1;
  const double chord = 2.0 * R * std::sin(std::numbers::pi / static_cast<double>(n));
  for (i64 j = 1; j <= j_max; ++j) {
    const double d =
        r * std::sin(static_cast<double>(j) * std::numbers::pi / static_cast<double>(m));
    const double ratio = d / chord;
    profile.j_values.push_back(j);
    profile.betas.push_back(static_cast<i64>(std::floor(ratio)));
    profile.d_values.push_back(d);
    profile.ambiguous.push_back(std::abs(ratio - std::round(ratio)) <= 1e-9);
  }
  return profile;
}

struct ExcessBounds {
  i64 lower = 0;
  i64 upper = 0;
};

/// Lower and upper bounds on the crossing excess of the concentric-circles
/// arrangement over cr_dc(m, n), summed over the chord classes
/// j = 1 .. ceil(m/2)-1:
///   lower = m   * sum( [n odd] beta_j + beta_j^2 )
///   upper = 4 m * sum( [n odd] beta_j / 2 + beta_j^2 )
inline ExcessBounds excess_bounds(i64 m, i64 n, double r, double R) {
  const BetaProfile profile = beta_profile(m, n, r, R);
  i64 sum_beta = 0;
  i64 sum_beta_sq = 0;
  for (i64 b : profile.betas) {
    sum_beta += b;
    sum_beta_sq += b * b;
  }
  const bool odd_n = (n % 2) != 0;
  ExcessBounds bounds;
  bounds.lower = m * ((odd_n ? sum_beta : 0) + sum_beta_sq);
  bounds.upper = 4 * m * sum_beta_sq + (odd_n ? 2 * m * sum_beta : 0);
  return bounds;
}

}  // namespace bicross
