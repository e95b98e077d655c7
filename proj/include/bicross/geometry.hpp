#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicross {

using i64 = std::int64_t;

// Relative tolerance shared by all incidence and side-of-line tests.
// A quantity is treated as zero when it falls below eps scaled by the
// magnitude of the coordinates involved.
inline constexpr double kGeomEps = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool same_point(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}

// A configuration too close to a tie to resolve reliably. Callers that own a
// rotation parameter may jitter it and retry; the counters never perturb
// inputs silently.
class DegenerateLayout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double max_abs_coord(const Point2& p, const Point2& q, const Point2& s) {
  double m = std::abs(p.x);
  m = std::max(m, std::abs(p.y));
  m = std::max(m, std::abs(q.x));
  m = std::max(m, std::abs(q.y));
  m = std::max(m, std::abs(s.x));
  m = std::max(m, std::abs(s.y));
  return m;
}

}  // namespace detail

/// Sign of the signed area of triangle (p, q, s): +1 counterclockwise,
/// -1 clockwise, 0 when |area| <= eps * scale^2 with scale the largest
/// absolute coordinate among the three points.
inline int orientation(const Point2& p, const Point2& q, const Point2& s,
                       double eps = kGeomEps) {
  const double cross = (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x);
  const double scale = detail::max_abs_coord(p, q, s);
  if (std::abs(cross) <= eps * scale * scale) return 0;
  return cross > 0.0 ? 1 : -1;
}

enum class SegmentRelation { disjoint, crossing, degenerate };

namespace detail {

// p is assumed collinear with (q1, q2); true when it also falls inside the
// closed segment's bounding box expanded by tol.
inline bool collinear_point_in_box(const Point2& p, const Point2& q1,
                                   const Point2& q2, double tol) {
  return p.x >= std::min(q1.x, q2.x) - tol && p.x <= std::max(q1.x, q2.x) + tol &&
         p.y >= std::min(q1.y, q2.y) - tol && p.y <= std::max(q1.y, q2.y) + tol;
}

}  // namespace detail

/// Classifies the relation between open segments (a1,a2) and (b1,b2).
///
/// crossing   — the interiors meet in exactly one point.
/// disjoint   — no interior intersection; segments sharing an endpoint
///              (exact coordinate equality) are disjoint by definition, as
///              are collinear segments that do not overlap.
/// degenerate — a non-shared endpoint lies on the other closed segment
///              within tolerance (includes collinear overlap); counting
///              cannot proceed reliably.
inline SegmentRelation classify_segments(const Point2& a1, const Point2& a2,
                                         const Point2& b1, const Point2& b2,
                                         double eps = kGeomEps) {
  if (same_point(a1, b1) || same_point(a1, b2) || same_point(a2, b1) ||
      same_point(a2, b2)) {
    return SegmentRelation::disjoint;
  }
  const int ob1 = orientation(a1, a2, b1, eps);
  const int ob2 = orientation(a1, a2, b2, eps);
  const int oa1 = orientation(b1, b2, a1, eps);
  const int oa2 = orientation(b1, b2, a2, eps);
  if (ob1 != 0 && ob2 != 0 && oa1 != 0 && oa2 != 0) {
    return (ob1 != ob2 && oa1 != oa2) ? SegmentRelation::crossing
                                      : SegmentRelation::disjoint;
  }
  // Some endpoint is collinear with the other segment's line. The only
  // intersection candidate is that endpoint itself: degenerate when it lies
  // on the other closed segment, otherwise no crossing is possible.
  const double scale =
      std::max(detail::max_abs_coord(a1, a2, b1), std::abs(b2.x) + std::abs(b2.y));
  const double tol = eps * std::max(1.0, scale);
  if (ob1 == 0 && detail::collinear_point_in_box(b1, a1, a2, tol))
    return SegmentRelation::degenerate;
  if (ob2 == 0 && detail::collinear_point_in_box(b2, a1, a2, tol))
    return SegmentRelation::degenerate;
  if (oa1 == 0 && detail::collinear_point_in_box(a1, b1, b2, tol))
    return SegmentRelation::degenerate;
  if (oa2 == 0 && detail::collinear_point_in_box(a2, b1, b2, tol))
    return SegmentRelation::degenerate;
  return SegmentRelation::disjoint;
}

/// Straight-line embedding of a complete bipartite graph: every pair
/// (part_a[i], part_b[j]) is an edge.
struct Layout {
  std::vector<Point2> part_a;
  std::vector<Point2> part_b;
  double eps_geom = kGeomEps;
};

enum class CountMethod { brute, partition };

struct CrossingReport {
  i64 count = 0;
  CountMethod method = CountMethod::brute;
  i64 degenerate_pairs = 0;  // always 0 in a returned report; rejection throws
};

namespace detail {

inline double point_segment_distance(const Point2& p, const Point2& s1,
                                     const Point2& s2) {
  const double dx = s2.x - s1.x;
  const double dy = s2.y - s1.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return std::hypot(p.x - s1.x, p.y - s1.y);
  double t = ((p.x - s1.x) * dx + (p.y - s1.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (s1.x + t * dx), p.y - (s1.y + t * dy));
}

}  // namespace detail

/// Rejects layouts the counters cannot handle: empty parts, non-finite or
/// duplicate coordinates, and any vertex lying within tolerance of an open
/// edge it does not belong to.
inline void validate_layout(const Layout& layout) {
  const auto m = static_cast<i64>(layout.part_a.size());
  const auto n = static_cast<i64>(layout.part_b.size());
  if (m < 1 || n < 1) throw std::invalid_argument("layout: both parts must be non-empty");

  std::vector<Point2> all;
  all.reserve(static_cast<std::size_t>(m + n));
  all.insert(all.end(), layout.part_a.begin(), layout.part_a.end());
  all.insert(all.end(), layout.part_b.begin(), layout.part_b.end());

  for (const Point2& p : all) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("layout: coordinates must be finite");
  }

  const double eps = layout.eps_geom;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double scale = std::max(
          {1.0, std::abs(all[i].x), std::abs(all[i].y), std::abs(all[j].x), std::abs(all[j].y)});
      if (std::hypot(all[i].x - all[j].x, all[i].y - all[j].y) <= eps * scale) {
        throw DegenerateLayout("layout: vertices " + std::to_string(i) + " and " +
                               std::to_string(j) + " coincide within tolerance");
      }
    }
  }

  for (i64 i = 0; i < m; ++i) {
    for (i64 j = 0; j < n; ++j) {
      const Point2& e1 = layout.part_a[static_cast<std::size_t>(i)];
      const Point2& e2 = layout.part_b[static_cast<std::size_t>(j)];
      for (std::size_t v = 0; v < all.size(); ++v) {
        const Point2& p = all[v];
        if (same_point(p, e1) || same_point(p, e2)) continue;
        const double scale = std::max({1.0, std::abs(p.x), std::abs(p.y), std::abs(e1.x),
                                       std::abs(e1.y), std::abs(e2.x), std::abs(e2.y)});
        if (detail::point_segment_distance(p, e1, e2) <= eps * scale) {
          throw DegenerateLayout("layout: vertex " + std::to_string(v) +
                                 " lies on edge (a" + std::to_string(i) + ", b" +
                                 std::to_string(j) + ") within tolerance");
        }
      }
    }
  }
}

/// Counts proper crossings over all unordered pairs of edges with distinct
/// endpoints in both parts, by direct segment tests over the O((mn)^2)
/// pairs. This is the reference counter every other method is checked
/// against. Throws DegenerateLayout naming the first offending pair.
inline CrossingReport count_crossings_brute(const Layout& layout) {
  const auto m = static_cast<i64>(layout.part_a.size());
  const auto n = static_cast<i64>(layout.part_b.size());
  CrossingReport report;
  report.method = CountMethod::brute;
  for (i64 i = 0; i < m; ++i) {
    for (i64 k = i + 1; k < m; ++k) {
      const Point2& ai = layout.part_a[static_cast<std::size_t>(i)];
      const Point2& ak = layout.part_a[static_cast<std::size_t>(k)];
      for (i64 j = 0; j < n; ++j) {
        for (i64 l = 0; l < n; ++l) {
          if (j == l) continue;
          const Point2& bj = layout.part_b[static_cast<std::size_t>(j)];
          const Point2& bl = layout.part_b[static_cast<std::size_t>(l)];
          switch (classify_segments(ai, bj, ak, bl, layout.eps_geom)) {
            case SegmentRelation::crossing:
              ++report.count;
              break;
            case SegmentRelation::degenerate:
              throw DegenerateLayout(
                  "brute count: degenerate edge pair (a" + std::to_string(i) + ", b" +
                  std::to_string(j) + ") x (a" + std::to_string(k) + ", b" +
                  std::to_string(l) + ")");
            case SegmentRelation::disjoint:
              break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace bicross
