#pragma once

#include <array>
#include <ostream>

#include "bodycad/scalar.hpp"

namespace bodycad {

using Vec3 = std::array<Rational, 3>;
using Point3 = Vec3;

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(const Rational& s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline Rational dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero(const Vec3& a) {
  return is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2]);
}

/// A nonzero direction. Length is irrelevant; no normalisation is applied.
class Direction3 {
 public:
  /// Throws Error(ZeroDirection) on the zero vector.
  explicit Direction3(Vec3 v);

  const Vec3& vec() const { return v_; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const Direction3&, const Direction3&) = default;

 private:
  Vec3 v_;
};

/// Instantaneous rigid motion s = (omega, v); a point p moves with velocity
/// v + omega x p.
struct Twist {
  Vec3 omega{0, 0, 0};
  Vec3 v{0, 0, 0};

  Vec3 velocity_of(const Point3& p) const { return v + cross(omega, p); }
};

std::ostream& operator<<(std::ostream& os, const Vec3& v);

}  // namespace bodycad
