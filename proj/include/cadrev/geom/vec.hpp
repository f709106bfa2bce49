// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace cadrev::geom {

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline Vec2 perp_ccw(Vec2 a) { return {-a.y, a.x}; }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) {
  double n = norm(a);
  return n > 0.0 ? a * (1.0 / n) : Vec3{0.0, 0.0, 0.0};
}

// Orthonormal sketch frame: world = origin + u*p.x + v*p.y + n*p.z.
struct Frame {
  Vec3 u, v, n;
  Vec3 origin;

  Vec3 to_world(Vec3 p) const {
    return origin + u * p.x + v * p.y + n * p.z;
  }
  Vec3 to_local(Vec3 p) const {
    Vec3 d = p - origin;
    return {dot(u, d), dot(v, d), dot(n, d)};
  }
};

// Rotates `p` about unit axis `axis` by `angle` (Rodrigues).
inline Vec3 rotate_about(Vec3 p, Vec3 axis, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return p * c + cross(axis, p) * s + axis * (dot(axis, p) * (1.0 - c));
}

}  // namespace cadrev::geom
