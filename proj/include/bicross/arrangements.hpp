#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicross/geometry.hpp"

namespace bicross {

/// Parameters of the concentric-circles arrangement: m vertices uniformly on
/// the inner circle of radius r, n on the outer circle of radius R, with
/// independent rotation offsets.
struct DCParams {
  i64 m = 0;
  i64 n = 0;
  double r = 0.0;
  double R = 0.0;
  double phi_in = 0.0;
  double phi_out = 0.0;

  double inner_step() const { return 2.0 * std::numbers::pi / static_cast<double>(m); }
  double outer_step() const { return 2.0 * std::numbers::pi / static_cast<double>(n); }
  /// Chord length between consecutive outer vertices.
  double outer_chord() const {
    return 2.0 * R * std::sin(std::numbers::pi / static_cast<double>(n));
  }

  Point2 inner_vertex(i64 i) const {
    const double a = phi_in + static_cast<double>(i) * inner_step();
    return {r * std::cos(a), r * std::sin(a)};
  }
  Point2 outer_vertex(i64 j) const {
    const double a = phi_out + static_cast<double>(j) * outer_step();
    return {R * std::cos(a), R * std::sin(a)};
  }

  // Clearance-maximizing rotation: chord directions form a lattice of
  // spacing pi/m, outer-vertex directions one of spacing 2pi/n (even n) or
  // pi/n (odd n); their difference lattice has spacing s = pi*g/(m*n).
  // Offsetting the outer polygon by pi/2 + s/2 centers every vertex between
  // chord directions, so the worst-case angular clearance is the best
  // achievable s/2.
  static double default_phi_out(i64 m, i64 n) {
    const i64 g = (n % 2 == 0) ? std::gcd(n, 2 * m) : std::gcd(n, m);
    const double s = std::numbers::pi * static_cast<double>(g) /
                     (static_cast<double>(m) * static_cast<double>(n));
    return std::fmod(std::numbers::pi / 2.0 + 0.5 * s,
                     2.0 * std::numbers::pi / static_cast<double>(n));
  }

  static DCParams with_default_rotation(i64 m, i64 n, double r, double R) {
    return DCParams{m, n, r, R, 0.0, default_phi_out(m, n)};
  }
};

inline void validate_params(const DCParams& p) {
  if (p.m < 1 || p.n < 1) throw std::invalid_argument("dc params: m and n must be >= 1");
  if (!(p.R > 0.0) || !(p.r > 0.0) || !(p.r < p.R))
    throw std::invalid_argument("dc params: need 0 < r < R");
  if (!std::isfinite(p.phi_in) || !std::isfinite(p.phi_out))
    throw std::invalid_argument("dc params: rotations must be finite");
}

// Rotation increment added per retry when a generated configuration lands on
// a tie.
inline constexpr double kJitterFraction = 1e-4;
inline constexpr int kDefaultJitterRetries = 8;

/// Parts on two parallel lines: part A at (i*spacing, 0), part B at
/// (j*spacing, 1).
inline Layout gen_dpl(i64 m, i64 n, double spacing = 1.0) {
  if (m < 1 || n < 1) throw std::invalid_argument("gen_dpl: m and n must be >= 1");
  if (!(spacing > 0.0)) throw std::invalid_argument("gen_dpl: spacing must be positive");
  Layout layout;
  for (i64 i = 0; i < m; ++i) layout.part_a.push_back({static_cast<double>(i) * spacing, 0.0});
  for (i64 j = 0; j < n; ++j) layout.part_b.push_back({static_cast<double>(j) * spacing, 1.0});
  validate_layout(layout);
  return layout;
}

/// Part A (c vertices) on a center line, part B split into t vertices above
/// and b below, all runs starting at x = 0.
inline Layout gen_tpl(i64 t, i64 c, i64 b, double spacing = 1.0, double line_gap = 1.0) {
  if (c < 1) throw std::invalid_argument("gen_tpl: center line needs at least one vertex");
  if (t < 0 || b < 0 || t + b < 1)
    throw std::invalid_argument("gen_tpl: top+bottom must hold at least one vertex");
  if (!(spacing > 0.0) || !(line_gap > 0.0))
    throw std::invalid_argument("gen_tpl: spacing and line_gap must be positive");
  Layout layout;
  for (i64 i = 0; i < c; ++i) layout.part_a.push_back({static_cast<double>(i) * spacing, 0.0});
  for (i64 i = 0; i < t; ++i)
    layout.part_b.push_back({static_cast<double>(i) * spacing, line_gap});
  for (i64 i = 0; i < b; ++i)
    layout.part_b.push_back({static_cast<double>(i) * spacing, -line_gap});
  validate_layout(layout);
  return layout;
}

/// Part A on the x-axis (left vertices at negative x, right at positive),
/// part B on the y-axis (top positive, bottom negative); nothing at the
/// origin.
inline Layout gen_dol(i64 left, i64 right, i64 top, i64 bottom, double spacing = 1.0) {
  if (left < 0 || right < 0 || top < 0 || bottom < 0)
    throw std::invalid_argument("gen_dol: negative partition size");
  if (left + right < 1 || top + bottom < 1)
    throw std::invalid_argument("gen_dol: each axis needs at least one vertex");
  if (!(spacing > 0.0)) throw std::invalid_argument("gen_dol: spacing must be positive");
  Layout layout;
  for (i64 i = 0; i < left; ++i)
    layout.part_a.push_back({-static_cast<double>(left - i) * spacing, 0.0});
  for (i64 i = 0; i < right; ++i)
    layout.part_a.push_back({static_cast<double>(i + 1) * spacing, 0.0});
  for (i64 i = 0; i < bottom; ++i)
    layout.part_b.push_back({0.0, -static_cast<double>(bottom - i) * spacing});
  for (i64 i = 0; i < top; ++i)
    layout.part_b.push_back({0.0, static_cast<double>(i + 1) * spacing});
  validate_layout(layout);
  return layout;
}

/// Part B as a regular (k+l)-gon on the circle, part A as m points evenly
/// spread over the middle 90% of a chord that leaves exactly k polygon
/// vertices on one side and l on the other. The chord runs orthogonal to the
/// bisector of the k-vertex arc, halfway between the two arcs' projections.
inline Layout gen_lic(i64 m, i64 k, i64 l, double circle_radius = 1.0) {
  if (m < 1) throw std::invalid_argument("gen_lic: m must be >= 1");
  if (k < 0 || l < 0 || k + l < 1)
    throw std::invalid_argument("gen_lic: k + l must be >= 1 with k, l >= 0");
  if (!(circle_radius > 0.0))
    throw std::invalid_argument("gen_lic: circle radius must be positive");
  const i64 n = k + l;
  const double R = circle_radius;
  const double pi = std::numbers::pi;

  for (int attempt = 0; attempt <= kDefaultJitterRetries; ++attempt) {
    const double rot =
        static_cast<double>(attempt) * kJitterFraction * 2.0 * pi / static_cast<double>(n);
    std::vector<Point2> ring;
    for (i64 j = 0; j < n; ++j) {
      const double a = rot + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
      ring.push_back({R * std::cos(a), R * std::sin(a)});
    }
    // Direction of the k-arc bisector; offsets c along it separate the arc
    // from the rest.
    const double mid = rot + pi * static_cast<double>(k - 1) / static_cast<double>(n);
    const double dx = std::cos(mid);
    const double dy = std::sin(mid);
    double offset;
    if (k == 0) {
      double max_proj = -R;
      for (const Point2& p : ring) max_proj = std::max(max_proj, p.x * dx + p.y * dy);
      offset = 0.5 * (max_proj + R);
    } else if (k == n) {
      double min_proj = R;
      for (const Point2& p : ring) min_proj = std::min(min_proj, p.x * dx + p.y * dy);
      offset = 0.5 * (min_proj - R);
    } else {
      const double arc_edge = R * std::cos(pi * static_cast<double>(k - 1) / static_cast<double>(n));
      const double rest_edge = R * std::cos(pi * static_cast<double>(k + 1) / static_cast<double>(n));
      offset = 0.5 * (arc_edge + rest_edge);
    }
    const double half = std::sqrt(std::max(0.0, R * R - offset * offset));
    Layout layout;
    layout.part_b = ring;
    const double tx = -dy;
    const double ty = dx;
    for (i64 i = 0; i < m; ++i) {
      const double s = (m == 1) ? 0.0
                                : -0.9 * half + 1.8 * half * static_cast<double>(i) /
                                                    static_cast<double>(m - 1);
      layout.part_a.push_back({offset * dx + s * tx, offset * dy + s * ty});
    }
    // Confirm the requested split before the expensive validation.
    i64 above = 0;
    for (const Point2& p : ring)
      if (p.x * dx + p.y * dy > offset) ++above;
    if (above != k) continue;
    try {
      validate_layout(layout);
      return layout;
    } catch (const DegenerateLayout&) {
      continue;
    }
  }
  throw DegenerateLayout("gen_lic: no non-degenerate chord found after jitter retries");
}

/// Realizes the concentric-circles arrangement exactly as parameterized.
/// Throws DegenerateLayout without retrying; see gen_dc_jittered for the
/// retrying variant.
inline Layout gen_dc(const DCParams& params) {
  validate_params(params);
  Layout layout;
  for (i64 i = 0; i < params.m; ++i) layout.part_a.push_back(params.inner_vertex(i));
  for (i64 j = 0; j < params.n; ++j) layout.part_b.push_back(params.outer_vertex(j));
  validate_layout(layout);
  return layout;
}

/// gen_dc with deterministic outer-rotation jitter on degeneracy. Returns
/// the layout together with the parameters actually used, so callers can
/// record the effective rotation.
inline std::pair<Layout, DCParams> gen_dc_jittered(DCParams params,
                                                   int retries = kDefaultJitterRetries) {
  validate_params(params);
  const double step = kJitterFraction * params.outer_step();
  for (int attempt = 0; attempt <= retries; ++attempt) {
    DCParams trial = params;
    trial.phi_out = params.phi_out + static_cast<double>(attempt) * step;
    try {
      return {gen_dc(trial), trial};
    } catch (const DegenerateLayout&) {
      if (attempt == retries) throw;
    }
  }
  throw DegenerateLayout("gen_dc_jittered: retries exhausted");
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 53-bit uniform draw in [0, 1); keeps sampling identical across platforms.
inline double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Seed for sample `index` of a multi-sample experiment rooted at `seed`.
inline std::uint64_t derive_sample_seed(std::uint64_t seed, std::uint64_t index) {
  return detail::splitmix64(seed + index);
}

inline constexpr int kFicMaxRetriesPerPoint = 10000;
// Rejection margin for random placement, far coarser than the counting
// tolerance so accepted layouts stay clear of ties.
inline constexpr double kFicMargin = 1e-7;

/// Part B as a regular n-gon on the circle; part A as m points drawn
/// uniformly from the open disk (mt19937_64, 53-bit draws, radius by square
/// root). Candidates landing within margin of an existing vertex or of any
/// edge are redrawn.
inline Layout gen_fic(i64 m, i64 n, double circle_radius, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("gen_fic: m and n must be >= 1");
  if (!(circle_radius > 0.0))
    throw std::invalid_argument("gen_fic: circle radius must be positive");
  const double R = circle_radius;
  const double pi = std::numbers::pi;
  Layout layout;
  for (i64 j = 0; j < n; ++j) {
    const double a = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    layout.part_b.push_back({R * std::cos(a), R * std::sin(a)});
  }
  std::mt19937_64 rng(seed);
  const double margin = kFicMargin * R;
  for (i64 i = 0; i < m; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kFicMaxRetriesPerPoint; ++attempt) {
      const double theta = 2.0 * pi * detail::uniform53(rng);
      const double rad = R * std::sqrt(detail::uniform53(rng));
      const Point2 cand{rad * std::cos(theta), rad * std::sin(theta)};

      bool ok = true;
      for (const Point2& p : layout.part_a)
        if (std::hypot(cand.x - p.x, cand.y - p.y) <= margin) ok = false;
      for (const Point2& p : layout.part_b)
        if (std::hypot(cand.x - p.x, cand.y - p.y) <= margin) ok = false;
      // Candidate against existing edges, and existing vertices against the
      // edges the candidate would add.
      for (std::size_t ai = 0; ok && ai < layout.part_a.size(); ++ai) {
        for (std::size_t bj = 0; ok && bj < layout.part_b.size(); ++bj) {
          if (detail::point_segment_distance(cand, layout.part_a[ai], layout.part_b[bj]) <=
              margin)
            ok = false;
        }
      }
      for (std::size_t bj = 0; ok && bj < layout.part_b.size(); ++bj) {
        const Point2& end = layout.part_b[bj];
        for (std::size_t ai = 0; ok && ai < layout.part_a.size(); ++ai) {
          if (detail::point_segment_distance(layout.part_a[ai], cand, end) <= margin)
            ok = false;
        }
        for (std::size_t bl = 0; ok && bl < layout.part_b.size(); ++bl) {
          if (bl == bj) continue;
          if (detail::point_segment_distance(layout.part_b[bl], cand, end) <= margin)
            ok = false;
        }
      }
      if (ok) {
        layout.part_a.push_back(cand);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::runtime_error("gen_fic: rejection sampling exceeded the retry cap");
  }
  validate_layout(layout);
  return layout;
}

/// Tagged parameter set for any supported arrangement, mirroring the layout
/// file metadata.
struct DplSpec {
  i64 m = 0;
  i64 n = 0;
  double spacing = 1.0;
};
struct TplSpec {
  i64 t = 0;
  i64 c = 0;
  i64 b = 0;
  double spacing = 1.0;
  double line_gap = 1.0;
};
struct DolSpec {
  i64 left = 0;
  i64 right = 0;
  i64 top = 0;
  i64 bottom = 0;
  double spacing = 1.0;
};
struct LicSpec {
  i64 m = 0;
  i64 k = 0;
  i64 l = 0;
  double circle_radius = 1.0;
};
struct FicSpec {
  i64 m = 0;
  i64 n = 0;
  double circle_radius = 1.0;
  std::uint64_t seed = 0;
};

using ArrangementSpec = std::variant<DplSpec, TplSpec, DolSpec, LicSpec, DCParams, FicSpec>;

inline std::string_view arrangement_name(const ArrangementSpec& spec) {
  switch (spec.index()) {
    case 0: return "dpl";
    case 1: return "tpl";
    case 2: return "dol";
    case 3: return "lic";
    case 4: return "dc";
    default: return "fic";
  }
}

inline Layout generate(const ArrangementSpec& spec) {
  if (const auto* s = std::get_if<DplSpec>(&spec)) return gen_dpl(s->m, s->n, s->spacing);
  if (const auto* s = std::get_if<TplSpec>(&spec))
    return gen_tpl(s->t, s->c, s->b, s->spacing, s->line_gap);
  if (const auto* s = std::get_if<DolSpec>(&spec))
    return gen_dol(s->left, s->right, s->top, s->bottom, s->spacing);
  if (const auto* s = std::get_if<LicSpec>(&spec))
    return gen_lic(s->m, s->k, s->l, s->circle_radius);
  if (const auto* s = std::get_if<DCParams>(&spec)) return gen_dc(*s);
  const auto& s = std::get<FicSpec>(spec);
  return gen_fic(s.m, s.n, s.circle_radius, s.seed);
}

/// generate() with the documented rotation-jitter retry for the concentric
/// arrangement; returns the layout with the parameters actually realized.
inline std::pair<Layout, ArrangementSpec> generate_resolved(const ArrangementSpec& spec) {
  if (const auto* s = std::get_if<DCParams>(&spec)) {
    auto [layout, effective] = gen_dc_jittered(*s);
    return {std::move(layout), ArrangementSpec{effective}};
  }
  return {generate(spec), spec};
}

}  // namespace bicross
