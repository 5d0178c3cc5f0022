#pragma once

#include <cmath>

namespace cvxn {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
  constexpr Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Point2& operator*=(double s) { x *= s; y *= s; return *this; }
};

using Vec2 = Point2;

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
constexpr bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(Vec2 a) { double n = norm(a); return {a.x / n, a.y / n}; }
inline Vec2 polar(double theta) { return {std::cos(theta), std::sin(theta)}; }
// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// Angle wrapped into [0, 2pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// True if `a` lies on the counterclockwise arc from `lo` spanning `span` radians.
inline bool angle_in_range(double a, double lo, double span, double tol = 0.0) {
  double d = wrap_angle(a - lo);
  if (d <= span + tol) return true;
  return d >= kTwoPi - tol;
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
constexpr bool operator==(Vec3 a, Vec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 unit(Vec3 a) { return (1.0 / norm(a)) * a; }

}  // namespace cvxn
