#pragma once

#include <cmath>
#include <ostream>

namespace rvm {

/// Point or vector in the plane. `x2` is the wall-normal coordinate in
/// the half-plane schemes.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x1, -a.x2}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x1, s * a.x2}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x1, s * a.x2}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x1 / s, a.x2 / s}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;

  friend std::ostream& operator<<(std::ostream& os, Vec2 v) {
    return os << '(' << v.x1 << ", " << v.x2 << ')';
  }
};

/// a^perp = (-a2, a1), rotation by +90 degrees.
constexpr Vec2 perp(Vec2 a) { return {-a.x2, a.x1}; }

/// Mirror image across the wall x2 = 0.
constexpr Vec2 reflect(Vec2 a) { return {a.x1, -a.x2}; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x1, a.x2); }

}  // namespace rvm
