#pragma once

// Vector algebra in Minkowski 3-space with signature (-,+,+).
// The first coordinate is the timelike one.

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"
#include "tolerances.hpp"

namespace minkruled {

struct LorentzVector {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr LorentzVector& operator+=(const LorentzVector& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  constexpr LorentzVector& operator-=(const LorentzVector& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
  }
  constexpr LorentzVector& operator*=(double k) {
    x0 *= k;
    x1 *= k;
    x2 *= k;
    return *this;
  }

  constexpr double operator[](int i) const { return i == 0 ? x0 : (i == 1 ? x1 : x2); }

  bool is_finite() const { return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2); }

  friend constexpr bool operator==(const LorentzVector&, const LorentzVector&) = default;
};

constexpr LorentzVector operator+(LorentzVector a, const LorentzVector& b) { return a += b; }
constexpr LorentzVector operator-(LorentzVector a, const LorentzVector& b) { return a -= b; }
constexpr LorentzVector operator-(const LorentzVector& a) { return {-a.x0, -a.x1, -a.x2}; }
constexpr LorentzVector operator*(double k, LorentzVector a) { return a *= k; }
constexpr LorentzVector operator*(LorentzVector a, double k) { return a *= k; }
constexpr LorentzVector operator/(LorentzVector a, double k) { return a *= (1.0 / k); }

constexpr double inner(const LorentzVector& u, const LorentzVector& v) {
  return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2;
}

inline double norm(const LorentzVector& u) { return std::sqrt(std::abs(inner(u, u))); }

constexpr double euclidean_dot(const LorentzVector& u, const LorentzVector& v) {
  return u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2;
}

inline double euclidean_norm(const LorentzVector& u) { return std::sqrt(euclidean_dot(u, u)); }

inline double max_abs(const LorentzVector& u) {
  return std::max({std::abs(u.x0), std::abs(u.x1), std::abs(u.x2)});
}

/// Threshold below which |<u,u>| counts as zero.
inline double null_threshold(const LorentzVector& u) {
  return tol::null_rel * std::max(1.0, euclidean_dot(u, u));
}

enum class Causal { Timelike, Spacelike, Lightlike };
enum class Orientation { None, Positive, Negative };

struct CausalClass {
  Causal kind = Causal::Lightlike;
  Orientation orientation = Orientation::None;  // set only for timelike vectors

  friend constexpr bool operator==(const CausalClass&, const CausalClass&) = default;
};

inline CausalClass classify(const LorentzVector& u) {
  const double q = inner(u, u);
  const double eps = null_threshold(u);
  if (q < -eps)
    return {Causal::Timelike, u.x0 > 0.0 ? Orientation::Positive : Orientation::Negative};
  if (q > eps) return {Causal::Spacelike, Orientation::None};
  return {Causal::Lightlike, Orientation::None};
}

inline std::string to_string(Causal c) {
  switch (c) {
    case Causal::Timelike: return "timelike";
    case Causal::Spacelike: return "spacelike";
    case Causal::Lightlike: return "lightlike";
  }
  return "?";
}

/// Lorentzian vector product: the Euclidean cross product with its first
/// component negated (index raised by the metric). Lorentz-orthogonal to both
/// arguments, and equal to +b for t, n of a positively oriented Frenet frame.
constexpr LorentzVector cross(const LorentzVector& u, const LorentzVector& v) {
  return {u.x2 * v.x1 - u.x1 * v.x2,
          u.x2 * v.x0 - u.x0 * v.x2,
          u.x0 * v.x1 - u.x1 * v.x0};
}

/// The coordinate formula (u3v2-u2v3, u1v3-u3v1, u1v2-u2v1) taken literally.
/// It differs from `cross` by the sign of the middle component and is not
/// Lorentz-orthogonal to its arguments in general. Kept for the
/// verification report only.
constexpr LorentzVector cross_literal(const LorentzVector& u, const LorentzVector& v) {
  return {u.x2 * v.x1 - u.x1 * v.x2,
          u.x0 * v.x2 - u.x2 * v.x0,
          u.x0 * v.x1 - u.x1 * v.x0};
}

/// Plain coordinate determinant of the rows (u, v, w).
constexpr double triple(const LorentzVector& u, const LorentzVector& v, const LorentzVector& w) {
  return u.x0 * (v.x1 * w.x2 - v.x2 * w.x1)
       - u.x1 * (v.x0 * w.x2 - v.x2 * w.x0)
       + u.x2 * (v.x0 * w.x1 - v.x1 * w.x0);
}

enum class AngleKind {
  SpacelikePlane,       // two spacelike vectors spanning a spacelike plane: circular angle
  SpacelikeTimelikePlane,  // two spacelike vectors spanning a timelike plane
  SpacelikeTimelike,    // one spacelike, one timelike vector
  TimelikeTimelike,     // two timelike vectors of equal orientation
};

struct LorentzianAngle {
  double value = 0.0;
  AngleKind kind = AngleKind::SpacelikePlane;
  Causal plane_class = Causal::Spacelike;
};

/// Angle between two non-null vectors. Circular (radians in [0, pi]) when
/// both are spacelike and span a spacelike plane, a non-negative rapidity
/// otherwise. The hyperbolic cases use |<u,v>|.
inline LorentzianAngle lorentz_angle(const LorentzVector& u, const LorentzVector& v) {
  const CausalClass cu = classify(u);
  const CausalClass cv = classify(v);
  if (cu.kind == Causal::Lightlike || cv.kind == Causal::Lightlike)
    throw Error(ErrorCode::NullInput, "lorentz_angle needs non-null vectors");

  const double uu = inner(u, u);
  const double vv = inner(v, v);
  const double uv = inner(u, v);
  const double scale = std::sqrt(std::abs(uu) * std::abs(vv));
  const double ratio = std::abs(uv) / scale;

  if (cu.kind == Causal::Spacelike && cv.kind == Causal::Spacelike) {
    const double gram = uu * vv - uv * uv;
    const double eps = tol::null_rel * std::max(1.0, euclidean_dot(u, u) * euclidean_dot(v, v));
    if (std::abs(gram) <= eps)
      throw Error(ErrorCode::DegeneratePlane, "spacelike pair spans a degenerate plane");
    if (gram > 0.0)
      return {std::acos(std::clamp(uv / scale, -1.0, 1.0)), AngleKind::SpacelikePlane,
              Causal::Spacelike};
    return {std::acosh(std::max(1.0, ratio)), AngleKind::SpacelikeTimelikePlane, Causal::Timelike};
  }
  if (cu.kind != cv.kind)
    return {std::asinh(ratio), AngleKind::SpacelikeTimelike, Causal::Timelike};
  if (cu.orientation != cv.orientation)
    throw Error(ErrorCode::OrientationMismatch, "timelike vectors with opposite orientation");
  return {std::acosh(std::max(1.0, ratio)), AngleKind::TimelikeTimelike, Causal::Timelike};
}

}  // namespace minkruled
