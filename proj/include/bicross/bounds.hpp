#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicross/arrangements.hpp"
#include "bicross/dc_partition.hpp"
#include "bicross/formulas.hpp"
#include "bicross/geometry.hpp"

namespace bicross {

/// Crossing excess of the realized concentric-circles layout over
/// cr_dc(m, n). Never negative: the closed form is the minimum over all
/// radii and rotations.
inline i64 measured_delta(const DCParams& params) {
  detail::require_order(params.m, params.n, "measured_delta");
  const Layout layout = gen_dc(params);
  const i64 count = count_crossings_brute(layout).count;
  const i64 delta = count - cr_dc(params.m, params.n);
  if (delta < 0)
    throw std::logic_error("measured_delta: count below the closed-form minimum");
  return delta;
}

/// Measured excess compared against the closed-form excess bounds. The
/// bounds are reported, not asserted: their derivation conditions depend on
/// the rotation, so violations are data. `params` records the rotation
/// actually used after any jitter.
struct BoundsReport {
  DCParams params;
  i64 measured = 0;  // excess over cr_dc
  i64 lower = 0;
  i64 upper = 0;
  bool within_lower = false;
  bool within_upper = false;
  bool degenerate = false;
};

inline BoundsReport check_excess_bounds(const DCParams& params,
                                        int retries = kDefaultJitterRetries) {
  BoundsReport report;
  report.params = params;
  const double step = kJitterFraction * params.outer_step();
  bool measured_ok = false;
  for (int attempt = 0; attempt <= retries && !measured_ok; ++attempt) {
    DCParams trial = params;
    trial.phi_out = params.phi_out + static_cast<double>(attempt) * step;
    try {
      report.measured = measured_delta(trial);
      report.params = trial;
      measured_ok = true;
    } catch (const DegenerateLayout&) {
    }
  }
  const ExcessBounds bounds =
      excess_bounds(params.m, params.n, params.r, params.R);
  report.lower = bounds.lower;
  report.upper = bounds.upper;
  if (!measured_ok) {
    report.degenerate = true;
    return report;
  }
  report.within_lower = report.measured >= report.lower;
  report.within_upper = report.measured <= report.upper;
  return report;
}

struct AsymptoticRow {
  i64 m = 0;
  i64 n = 0;
  double ratio_rR = 0.0;
  i64 delta = 0;
  double normalized = 0.0;  // delta / (n^2 m)
};

/// Measures the crossing excess at a fixed radius ratio across a grid of
/// outer-part sizes, normalized by n^2 m.
inline std::vector<AsymptoticRow> asymptotic_sweep(i64 m, const std::vector<i64>& n_values,
                                                   double ratio_rR) {
  if (!(ratio_rR > 0.0) || !(ratio_rR < 1.0))
    throw std::invalid_argument("asymptotic_sweep: ratio must lie in (0, 1)");
  std::vector<AsymptoticRow> rows;
  for (i64 n : n_values) {
    detail::require_order(m, n, "asymptotic_sweep");
    DCParams params = DCParams::with_default_rotation(m, n, ratio_rR, 1.0);
    const BoundsReport report = check_excess_bounds(params);
    if (report.degenerate)
      throw DegenerateLayout("asymptotic_sweep: degenerate at n = " + std::to_string(n));
    AsymptoticRow row;
    row.m = m;
    row.n = n;
    row.ratio_rR = ratio_rR;
    row.delta = report.measured;
    row.normalized = static_cast<double>(report.measured) /
                     (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(m));
    rows.push_back(row);
  }
  return rows;
}

/// Observed crossing counts over seeded random placements of the inner part
/// within the circle. Sample k draws its own generator from
/// derive_sample_seed(seed, k), so results do not depend on evaluation
/// order.
struct ConjectureSummary {
  i64 min_count = 0;
  i64 max_count = 0;
  i64 min_index = 0;  // sample indices realizing the extremes
  i64 max_index = 0;
  i64 samples = 0;
  std::map<i64, i64> histogram;
};

inline ConjectureSummary conjecture1_sweep(i64 m, i64 n, i64 samples, std::uint64_t seed) {
  if (m < n || n < 1) throw std::invalid_argument("conjecture1_sweep: requires m >= n >= 1");
  if (samples < 1) throw std::invalid_argument("conjecture1_sweep: samples must be >= 1");
  ConjectureSummary summary;
  summary.samples = samples;
  const i64 pair_cap = choose2(m) * choose2(n);
  for (i64 k = 0; k < samples; ++k) {
    const Layout layout = gen_fic(m, n, 1.0, derive_sample_seed(seed, static_cast<std::uint64_t>(k)));
    const i64 count = count_crossings_brute(layout).count;
    if (count > pair_cap)
      throw std::logic_error(
          "conjecture1_sweep: count exceeds the independent-edge-pair cap at sample " +
          std::to_string(k));
    summary.histogram[count] += 1;
    if (k == 0 || count < summary.min_count) {
      summary.min_count = count;
      summary.min_index = k;
    }
    if (k == 0 || count > summary.max_count) {
      summary.max_count = count;
      summary.max_index = k;
    }
  }
  return summary;
}

}  // namespace bicross
