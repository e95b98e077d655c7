#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicross/dc_partition.hpp"
#include "bicross/formulas.hpp"

namespace bicross {

/// Raised when the balanced-configuration predicate is observed true above a
/// radius where it was false; indicates a rotation the bisection cannot
/// certify.
class NotMonotone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThresholdConfig {
  double tol_bisect = 1e-10;  // relative to R
  // Side-of-chord tolerance for the predicate. The threshold radius is
  // itself a tie (an outer vertex crossing a chord line), so this must be
  // small enough that the tie zone is narrower than tol_bisect, yet well
  // above double rounding noise (~4e-16 at unit scale).
  double eps_geom = 1e-13;
  int max_iter = 200;
  int jitter_retries = kDefaultJitterRetries;
  int verify_samples = 64;
};

struct ThresholdResult {
  double t_cr = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  double phi_in = 0.0;
  double phi_out = 0.0;
  // Inner pair whose chord is unbalanced at bracket_hi; (-1,-1) when the
  // predicate never turned false below the probe ceiling.
  std::pair<i64, i64> witness{-1, -1};
  bool hit_upper_limit = false;
};

namespace detail {

struct PredicateEval {
  bool balanced = false;
  std::optional<std::pair<i64, i64>> witness;
};

// Evaluates the balance predicate at radius r, nudging the radius when an
// outer vertex lands exactly on a chord. The nudges clear the eps_geom tie
// zone while staying well below the bisection tolerance.
inline PredicateEval eval_balanced(i64 m, i64 n, double R, double phi_in, double phi_out,
                                   double r, double eps) {
  static constexpr double kNudges[] = {1.0, 1.0 + 4e-12, 1.0 - 4e-12, 1.0 + 8e-12,
                                       1.0 - 8e-12};
  for (double factor : kNudges) {
    DCParams params{m, n, r * factor, R, phi_in, phi_out};
    try {
      auto unbalanced = first_unbalanced_pair(params, eps);
      return {!unbalanced.has_value(), unbalanced};
    } catch (const DegenerateLayout&) {
      continue;
    }
  }
  throw DegenerateLayout("threshold predicate: degenerate at r = " + std::to_string(r));
}

}  // namespace detail

/// Maximum inner radius at which the concentric-circles arrangement still
/// attains cr_dc(m, n), for fixed outer radius and rotations. Solved by
/// bisection on the balanced-chords predicate; the returned bracket is
/// certified by evaluating the predicate at both ends, and a coarse sweep
/// re-checks monotonicity across (0, R).
inline ThresholdResult crossing_threshold(i64 m, i64 n, double R, double phi_in,
                                          double phi_out,
                                          const ThresholdConfig& cfg = {}) {
  if (n < 2) throw std::invalid_argument("crossing_threshold: requires n >= 2");
  if (m < n)
    throw std::invalid_argument(
        "crossing_threshold: requires m >= n (larger part on the inner circle)");
  if (!(R > 0.0)) throw std::invalid_argument("crossing_threshold: R must be positive");
  if (!(cfg.tol_bisect > 0.0) || cfg.max_iter < 1)
    throw std::invalid_argument("crossing_threshold: bad config");

  const double jitter_step = kJitterFraction * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int attempt = 0;; ++attempt) {
    const double rot = phi_out + static_cast<double>(attempt) * jitter_step;
    try {
      auto pred = [&](double r) {
        return detail::eval_balanced(m, n, R, phi_in, rot, r, cfg.eps_geom);
      };

      double lo = 1e-6 * R;
      for (int shrink = 0; shrink < 60 && !pred(lo).balanced; ++shrink) lo *= 0.5;
      if (!pred(lo).balanced)
        throw NotMonotone("crossing_threshold: predicate false down to r = " +
                          std::to_string(lo));

      double hi = (1.0 - 1e-6) * R;
      detail::PredicateEval hi_eval = pred(hi);
      if (hi_eval.balanced) {
        // Balanced across the whole probe range; the threshold is at or
        // beyond the ceiling (e.g. n <= 2 with every chord a diameter).
        ThresholdResult result;
        result.t_cr = hi;
        result.bracket_lo = hi;
        result.bracket_hi = R;
        result.iterations = 0;
        result.phi_in = phi_in;
        result.phi_out = rot;
        result.hit_upper_limit = true;
        return result;
      }

      int iterations = 0;
      while (hi - lo > cfg.tol_bisect * R) {
        if (++iterations > cfg.max_iter)
          throw NotMonotone("crossing_threshold: bisection failed to converge");
        const double mid = 0.5 * (lo + hi);
        if (pred(mid).balanced)
          lo = mid;
        else
          hi = mid;
      }

      // Certificate: predicate state at both bracket ends, witness at the
      // unbalanced end.
      if (!pred(lo).balanced)
        throw NotMonotone("crossing_threshold: bracket lower end not balanced at r = " +
                          std::to_string(lo));
      hi_eval = pred(hi);
      if (hi_eval.balanced)
        throw NotMonotone("crossing_threshold: bracket upper end balanced at r = " +
                          std::to_string(hi));

      for (int s = 1; s <= cfg.verify_samples; ++s) {
        const double rs = R * static_cast<double>(s) /
                          static_cast<double>(cfg.verify_samples + 1);
        if (rs <= lo && !pred(rs).balanced)
          throw NotMonotone("crossing_threshold: predicate false at r = " +
                            std::to_string(rs) + " yet true at r = " + std::to_string(lo));
        if (rs >= hi && pred(rs).balanced)
          throw NotMonotone("crossing_threshold: predicate true at r = " +
                            std::to_string(rs) + " yet false at r = " + std::to_string(hi));
      }

      ThresholdResult result;
      result.t_cr = lo;
      result.bracket_lo = lo;
      result.bracket_hi = hi;
      result.iterations = iterations;
      result.phi_in = phi_in;
      result.phi_out = rot;
      result.witness = hi_eval.witness.value_or(std::pair<i64, i64>{-1, -1});
      return result;
    } catch (const DegenerateLayout&) {
      if (attempt >= cfg.jitter_retries)
        throw DegenerateLayout("crossing_threshold: rotation jitter retries exhausted");
    }
  }
}

inline ThresholdResult crossing_threshold(i64 m, i64 n, double R,
                                          const ThresholdConfig& cfg = {}) {
  return crossing_threshold(m, n, R, 0.0, DCParams::default_phi_out(m, n), cfg);
}

/// Per-class statistics of the chords through inner-vertex pairs. Chords
/// whose endpoints are j steps apart form class j; all of them lie at the
/// same distance from the center and, for symmetric configurations, produce
/// the same outer split.
struct LineClassStats {
  i64 class_index = 0;    // j = 1 .. ceil(m/2)-1, plus m/2 for even m
  double line_distance = 0.0;  // measured distance of the chord to the center
  i64 side_u = 0;
  i64 side_l = 0;
  i64 beta = 0;
  int parallel_case = 1;  // 2 when the chord parallels a near-diameter outer chord
  i64 member_count = 0;
};

namespace detail {

inline double chord_center_distance(const DCParams& params, i64 a, i64 b) {
  const Point2 pa = params.inner_vertex(a);
  const Point2 pb = params.inner_vertex(b);
  const double cross = pa.x * pb.y - pa.y * pb.x;
  const double len = std::hypot(pb.x - pa.x, pb.y - pa.y);
  return std::abs(cross) / len;
}

inline double angle_mod_pi(double a) {
  const double pi = std::numbers::pi;
  a = std::fmod(a, pi);
  if (a < 0.0) a += pi;
  return a;
}

// Planks that split the outer polygon near-evenly are bounded by outer
// chords spanning ceil(n/2)-1 steps; their directions repeat every outer
// step.
inline int parallel_case_for(const DCParams& params, i64 a, i64 b) {
  const Point2 pa = params.inner_vertex(a);
  const Point2 pb = params.inner_vertex(b);
  const double dir = angle_mod_pi(std::atan2(pb.y - pa.y, pb.x - pa.x));
  const double pi = std::numbers::pi;
  const i64 half = (params.n + 1) / 2;
  for (i64 i = 0; i < params.n; ++i) {
    const double plank_dir = angle_mod_pi(
        params.phi_out +
        params.outer_step() * (static_cast<double>(i) + static_cast<double>(half - 1) / 2.0) +
        pi / 2.0);
    double diff = std::abs(dir - plank_dir);
    diff = std::min(diff, pi - diff);
    if (diff <= 1e-9) return 2;
  }
  return 1;
}

}  // namespace detail

/// Computes one record per chord class, verifying that every member of a
/// class produces the same unordered outer split. Throws ClassInconsistent
/// when two members disagree and DegenerateLayout when a split is undecided.
inline std::vector<LineClassStats> line_class_stats(const DCParams& params,
                                                    double eps = kGeomEps) {
  validate_params(params);
  std::vector<LineClassStats> stats;
  const i64 m = params.m;
  const i64 j_max = (m + 1) / 2 - 1;

  auto class_record = [&](i64 j, i64 members) {
    LineClassStats rec;
    rec.class_index = j;
    rec.member_count = members;
    bool first = true;
    for (i64 a = 0; a < members; ++a) {
      const i64 b = (a + j) % m;
      const OuterSplit split = outer_split(params, a, b, eps);
      const i64 u = std::max(split.left, split.right);
      const i64 l = std::min(split.left, split.right);
      if (first) {
        rec.side_u = u;
        rec.side_l = l;
        rec.line_distance = detail::chord_center_distance(params, a, b);
        rec.parallel_case = detail::parallel_case_for(params, a, b);
        first = false;
      } else if (u != rec.side_u || l != rec.side_l) {
        throw ClassInconsistent("line class " + std::to_string(j) + ": chord (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                ") splits " + std::to_string(u) + "/" + std::to_string(l) +
                                " but the class representative splits " +
                                std::to_string(rec.side_u) + "/" + std::to_string(rec.side_l));
      }
    }
    return rec;
  };

  for (i64 j = 1; j <= j_max; ++j) {
    LineClassStats rec = class_record(j, m);
    rec.beta = beta_step(j, params.m, params.n, params.r, params.R);
    stats.push_back(rec);
  }
  if (m % 2 == 0 && m >= 2) {
    LineClassStats rec = class_record(m / 2, m / 2);
    rec.beta = 0;  // diameters stay balanced at every radius
    stats.push_back(rec);
  }
  return stats;
}

}  // namespace bicross
