#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>

#include "bicross/arrangements.hpp"
#include "bicross/formulas.hpp"
#include "bicross/geometry.hpp"

namespace bicross {

/// Outer-vertex counts on the two sides of the line through inner vertices
/// a and b.
struct OuterSplit {
  i64 left = 0;
  i64 right = 0;
};

/// Splits the outer vertices by the line through inner vertices a and b.
/// Throws DegenerateLayout when an outer vertex lies on that line within
/// tolerance.
inline OuterSplit outer_split(const DCParams& params, i64 a, i64 b,
                              double eps = kGeomEps) {
  const Point2 pa = params.inner_vertex(a);
  const Point2 pb = params.inner_vertex(b);
  OuterSplit split;
  for (i64 k = 0; k < params.n; ++k) {
    const int side = orientation(pa, pb, params.outer_vertex(k), eps);
    if (side == 0) {
      throw DegenerateLayout("outer vertex " + std::to_string(k) +
                             " lies on the chord through inner vertices " +
                             std::to_string(a) + " and " + std::to_string(b));
    }
    (side > 0 ? split.left : split.right) += 1;
  }
  return split;
}

/// Counts crossings of the concentric-circles arrangement without building
/// segments: for every inner pair, edges to same-side outer vertices cross
/// pairwise, giving C(left,2) + C(right,2) per pair. Must agree with
/// count_crossings_brute on the realized layout.
inline CrossingReport count_crossings_partition(const DCParams& params,
                                                double eps = kGeomEps) {
  validate_params(params);
  CrossingReport report;
  report.method = CountMethod::partition;
  for (i64 a = 0; a < params.m; ++a) {
    for (i64 b = a + 1; b < params.m; ++b) {
      const OuterSplit split = outer_split(params, a, b, eps);
      report.count += choose2(split.left) + choose2(split.right);
    }
  }
  return report;
}

/// First inner pair (in lexicographic order) whose chord splits the outer
/// vertices into sides differing by more than one, or nullopt when every
/// chord is balanced.
inline std::optional<std::pair<i64, i64>> first_unbalanced_pair(const DCParams& params,
                                                                double eps = kGeomEps) {
  for (i64 a = 0; a < params.m; ++a) {
    for (i64 b = a + 1; b < params.m; ++b) {
      const OuterSplit split = outer_split(params, a, b, eps);
      if (std::abs(split.left - split.right) > 1) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

/// True iff every inner-pair chord is a balanced line for the outer
/// vertices, which is exactly when the crossing count equals cr_dc(m, n).
inline bool is_min_crossing_config(const DCParams& params, double eps = kGeomEps) {
  validate_params(params);
  return !first_unbalanced_pair(params, eps).has_value();
}

}  // namespace bicross
