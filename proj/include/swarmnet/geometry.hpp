#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace swarmnet {

/// Planar position in meters (local frame, no geodesy).
struct GeoPoint {
  double x_m = 0.0;
  double y_m = 0.0;

  friend bool operator==(const GeoPoint& a, const GeoPoint& b) {
    return a.x_m == b.x_m && a.y_m == b.y_m;
  }
};

inline double distance(const GeoPoint& a, const GeoPoint& b) {
  return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m);
}

/// Ordered vertex list; valid when it has >= 3 vertices, does not
/// self-intersect and encloses positive area.
struct Polygon {
  std::vector<GeoPoint> vertices;

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices == b.vertices; }
};

struct BoundingBox {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

inline BoundingBox bounding_box(const Polygon& poly) {
  BoundingBox box;
  if (poly.vertices.empty()) return box;
  box.min_x = box.max_x = poly.vertices.front().x_m;
  box.min_y = box.max_y = poly.vertices.front().y_m;
  for (const auto& v : poly.vertices) {
    box.min_x = std::min(box.min_x, v.x_m);
    box.max_x = std::max(box.max_x, v.x_m);
    box.min_y = std::min(box.min_y, v.y_m);
    box.max_y = std::max(box.max_y, v.y_m);
  }
  return box;
}

// Shoelace; sign follows vertex orientation.
inline double signed_area(const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    acc += p.x_m * q.y_m - q.x_m * p.y_m;
  }
  return 0.5 * acc;
}

inline double polygon_area(const Polygon& poly) { return std::abs(signed_area(poly)); }

inline GeoPoint polygon_centroid(const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  const double a = signed_area(poly);
  if (n == 0 || a == 0.0) return {};
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    const double cross = p.x_m * q.y_m - q.x_m * p.y_m;
    cx += (p.x_m + q.x_m) * cross;
    cy += (p.y_m + q.y_m) * cross;
  }
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

namespace detail {

inline bool segments_properly_intersect(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c,
                                        const GeoPoint& d) {
  auto orient = [](const GeoPoint& p, const GeoPoint& q, const GeoPoint& r) {
    const double v = (q.x_m - p.x_m) * (r.y_m - p.y_m) - (q.y_m - p.y_m) * (r.x_m - p.x_m);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
  };
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

}  // namespace detail

// O(n^2) pairwise edge check; fine for mission perimeters.
inline bool polygon_is_simple(const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;  // shared endpoints
      if (detail::segments_properly_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

inline bool is_valid_polygon(const Polygon& poly, std::string* why = nullptr) {
  if (poly.vertices.size() < 3) {
    if (why) *why = "fewer than 3 vertices";
    return false;
  }
  if (polygon_area(poly) <= 0.0) {
    if (why) *why = "zero enclosed area";
    return false;
  }
  if (!polygon_is_simple(poly)) {
    if (why) *why = "self-intersecting boundary";
    return false;
  }
  return true;
}

// Even-odd ray cast with half-open edges so vertices count once.
inline bool point_in_polygon(const GeoPoint& p, const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const bool crosses = (v[i].y_m > p.y_m) != (v[j].y_m > p.y_m);
    if (crosses) {
      const double x_hit =
          v[j].x_m + (p.y_m - v[j].y_m) / (v[i].y_m - v[j].y_m) * (v[i].x_m - v[j].x_m);
      if (p.x_m < x_hit) inside = !inside;
    }
  }
  return inside;
}

inline double point_segment_distance(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
  const double dx = b.x_m - a.x_m;
  const double dy = b.y_m - a.y_m;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance(p, a);
  double t = ((p.x_m - a.x_m) * dx + (p.y_m - a.y_m) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, {a.x_m + t * dx, a.y_m + t * dy});
}

/// Closest-approach parameter of p along segment a->b, in [0,1].
inline double point_segment_param(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
  const double dx = b.x_m - a.x_m;
  const double dy = b.y_m - a.y_m;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return 0.0;
  return std::clamp(((p.x_m - a.x_m) * dx + (p.y_m - a.y_m) * dy) / len2, 0.0, 1.0);
}

/// Intersects the horizontal line y=scan_y with the polygon boundary and
/// returns the interior intervals as sorted [x_enter, x_exit) pairs.
inline std::vector<std::pair<double, double>> scanline_intervals(const Polygon& poly,
                                                                 double scan_y) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  std::vector<double> xs;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double y1 = v[j].y_m, y2 = v[i].y_m;
    if ((y1 > scan_y) == (y2 > scan_y)) continue;  // half-open crossing rule
    xs.push_back(v[j].x_m + (scan_y - y1) / (y2 - y1) * (v[i].x_m - v[j].x_m));
  }
  std::sort(xs.begin(), xs.end());
  std::vector<std::pair<double, double>> spans;
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) spans.emplace_back(xs[i], xs[i + 1]);
  return spans;
}

}  // namespace swarmnet
