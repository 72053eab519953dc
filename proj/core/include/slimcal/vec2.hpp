#pragma once

#include <cmath>

namespace slimcal {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double px, double py) : x(px), y(py) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  // z-component of the 2D cross product; sign gives orientation.
  constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }

  double norm() const { return std::hypot(x, y); }

  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }

  // 90-degree counterclockwise rotation.
  constexpr Vec2 perp() const { return {-y, x}; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

}  // namespace slimcal
