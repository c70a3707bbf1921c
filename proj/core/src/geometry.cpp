#include "hangersim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hangersim {

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

double wrap_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("wrap_angle: non-finite angle");
  double r = std::remainder(theta, 2.0 * M_PI);
  // remainder returns values in [-pi, pi]; nothing further to do, but keep
  // -0.0 out of the canonical form.
  if (r == 0.0) r = 0.0;
  return r;
}

bool point_in_polygon(const Vec2& p, std::span<const Vec2> poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(p - a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + ab * t));
}

namespace {

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (v > 0.0) - (v < 0.0);
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  auto on_segment = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
  };
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

double dist_segment_segment(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  if (segments_intersect(p1, p2, q1, q2)) return 0.0;
  return std::min({dist_point_segment(p1, q1, q2), dist_point_segment(p2, q1, q2),
                   dist_point_segment(q1, p1, p2), dist_point_segment(q2, p1, p2)});
}

}  // namespace

double dist_segment_aabb(const Vec2& a, const Vec2& b, const Aabb& box) {
  if (box.contains(a) || box.contains(b)) return 0.0;
  const Vec2 c1 = box.lo;
  const Vec2 c2{box.hi.x, box.lo.y};
  const Vec2 c3 = box.hi;
  const Vec2 c4{box.lo.x, box.hi.y};
  return std::min({dist_segment_segment(a, b, c1, c2), dist_segment_segment(a, b, c2, c3),
                   dist_segment_segment(a, b, c3, c4), dist_segment_segment(a, b, c4, c1)});
}

}  // namespace hangersim
