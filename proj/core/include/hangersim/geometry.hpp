#pragma once

#include <span>
#include <vector>

namespace hangersim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

double dot(const Vec2& a, const Vec2& b);
double norm(const Vec2& v);

// Planar pose. theta is kept in [-pi, pi] by wrap_angle.
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  bool operator==(const Pose2& o) const { return x == o.x && y == o.y && theta == o.theta; }
};

// Wraps to [-pi, pi] via IEEE remainder. Convention: odd positive multiples
// of pi map to -pi (e.g. 3*pi -> -pi) while pi itself maps to pi.
// Throws std::invalid_argument on non-finite input.
double wrap_angle(double theta);

using Polyline = std::vector<Vec2>;

// Even-odd crossing test. Points exactly on the boundary follow the
// half-open edge convention of the crossing rule (deterministic).
bool point_in_polygon(const Vec2& p, std::span<const Vec2> poly);

double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

struct Aabb {
  Vec2 lo;
  Vec2 hi;

  bool contains(const Vec2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  Aabb inflated(double m) const { return {{lo.x - m, lo.y - m}, {hi.x + m, hi.y + m}}; }
};

// Minimum distance between segment [a, b] and an axis-aligned box
// (0 when they intersect).
double dist_segment_aabb(const Vec2& a, const Vec2& b, const Aabb& box);

}  // namespace hangersim
