#pragma once

// Trajectory ruled surfaces phi(s, v) = gamma(s) + v X(s) over the involute,
// with X = x1 t* + x2 n* + x3 b* fixed in the involute frame.
//
// The distribution parameter is computed two ways:
//   drall_closed  - from kappa, |D|, theta and theta' of the base curve;
//   drall_numeric - det(gamma', X, X') / |<X', X'>| with X' differenced.
//
// In the involute frame the ruling derivative is, with w = |D| for a
// spacelike Darboux vector,
//   X' = -x2 w t* + (x3 theta' - x1 w) n* + x2 theta' b*,
// and for a timelike Darboux vector (w = sign(tau) |D|)
//   X' = -x2 w t* + (x1 w - x3 theta') n* - x2 theta' b*.
// Both frame changes have unit determinant, so
//   det(gamma', X, X') = +-(c - s) kappa [x1 x3 w - theta' (x3^2 - x2^2)].

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "curve.hpp"
#include "error.hpp"
#include "finite_difference.hpp"
#include "frenet.hpp"
#include "involute.hpp"
#include "lorentz.hpp"
#include "synthesis.hpp"
#include "tolerances.hpp"

namespace minkruled {

// ---------------------------------------------------------------------------
// Ruling directions
// ---------------------------------------------------------------------------

enum class RulingKind { TStar, NStar, BStar, General };

inline std::string to_string(RulingKind k) {
  switch (k) {
    case RulingKind::TStar: return "t*";
    case RulingKind::NStar: return "n*";
    case RulingKind::BStar: return "b*";
    case RulingKind::General: return "general";
  }
  return "?";
}

/// Coordinates of the ruling in the involute frame, normalized so that
/// |x1^2 - x2^2 + x3^2| = 1. The causal class is the one the ruling has
/// under the (+,-,+) signature of the involute frame; spacelike and
/// timelike rulings are both admitted.
struct RulingDirection {
  double x1 = 1.0;
  double x2 = 0.0;
  double x3 = 0.0;
  Causal causal = Causal::Spacelike;

  RulingKind kind() const {
    if (x2 == 0.0 && x3 == 0.0) return RulingKind::TStar;
    if (x1 == 0.0 && x3 == 0.0) return RulingKind::NStar;
    if (x1 == 0.0 && x2 == 0.0) return RulingKind::BStar;
    return RulingKind::General;
  }
};

inline RulingDirection make_direction(double x1, double x2, double x3) {
  if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3))
    throw Error(ErrorCode::NullDirection, "direction components must be finite");
  const double q = x1 * x1 - x2 * x2 + x3 * x3;
  const double eps = tol::null_rel * std::max(1.0, x1 * x1 + x2 * x2 + x3 * x3);
  if (std::abs(q) <= eps)
    throw Error(ErrorCode::NullDirection, "x1^2 - x2^2 + x3^2 = 0");
  const double k = 1.0 / std::sqrt(std::abs(q));
  return {k * x1, k * x2, k * x3, q < 0.0 ? Causal::Timelike : Causal::Spacelike};
}

inline RulingDirection t_star_direction() { return make_direction(1, 0, 0); }
inline RulingDirection n_star_direction() { return make_direction(0, 1, 0); }
inline RulingDirection b_star_direction() { return make_direction(0, 0, 1); }

struct TrajectoryRuledSurface {
  InvoluteCurve inv;
  RulingDirection dir;

  RulingKind kind() const { return dir.kind(); }
};

inline LorentzVector ruling(const TrajectoryRuledSurface& surf, double s) {
  return involute_frame_pointwise(surf.inv.base(), s).combine(surf.dir.x1, surf.dir.x2, surf.dir.x3);
}

inline LorentzVector surface_point(const TrajectoryRuledSurface& surf, double s, double v) {
  surf.inv.require_in_domain(s);
  return involute_point(surf.inv, s) + v * ruling(surf, s);
}

// ---------------------------------------------------------------------------
// Closed-form ruling derivative
// ---------------------------------------------------------------------------

/// Everything the closed forms need at one parameter value.
struct RulingJet {
  DarbouxData dd;
  InvoluteFrame frame;
  double c_minus_s = 0.0;
  double w = 0.0;                          // |D|, signed by tau for a timelike D
  std::array<double, 3> dx{};              // X' in (t*, n*, b*)
  double dx_square = 0.0;                  // <X', X'>
  LorentzVector X;
  LorentzVector dX;
  LorentzVector gamma_dot;
};

inline RulingJet ruling_jet(const TrajectoryRuledSurface& surf, double s) {
  RulingJet j;
  j.dd = darboux_data(surf.inv.base(), s);
  j.frame = involute_frame(j.dd);
  j.c_minus_s = surf.inv.c() - s;
  const double kappa = j.dd.frame.kappa;
  const double td = j.dd.theta_dot;
  const auto& [x1, x2, x3, causal] = surf.dir;
  if (j.dd.d_case == DarbouxCase::Spacelike) {
    j.w = j.dd.d_norm;
    j.dx = {-x2 * j.w, x3 * td - x1 * j.w, x2 * td};
  } else {
    j.w = j.dd.frame.tau >= 0.0 ? j.dd.d_norm : -j.dd.d_norm;
    j.dx = {-x2 * j.w, x1 * j.w - x3 * td, -x2 * td};
  }
  const auto sig = j.frame.signature();
  j.dx_square = sig[0] * j.dx[0] * j.dx[0] + sig[1] * j.dx[1] * j.dx[1] + sig[2] * j.dx[2] * j.dx[2];
  j.X = j.frame.combine(x1, x2, x3);
  j.dX = j.frame.combine(j.dx[0], j.dx[1], j.dx[2]);
  j.gamma_dot = j.c_minus_s * kappa * j.dd.frame.n;
  return j;
}

inline LorentzVector ruling_derivative(const TrajectoryRuledSurface& surf, double s) {
  surf.inv.require_in_domain(s);
  return ruling_jet(surf, s).dX;
}

/// X' by central differences of X(s), independent of the closed form above.
inline LorentzVector ruling_derivative_numeric(const TrajectoryRuledSurface& surf, double s) {
  surf.inv.require_in_domain(s);
  surf.inv.base().require_in_domain(s, darboux_margin(surf.inv.base()));
  return fd::first([&](double q) { return ruling(surf, q); }, s, tol::h_low);
}

// ---------------------------------------------------------------------------
// Distribution parameter
// ---------------------------------------------------------------------------

enum class Degeneracy {
  Regular,
  Cylindrical,  // X' = 0: constant ruling
  Singular,     // <X', X'> = 0 with X' != 0
};

inline std::string to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Regular: return "regular";
    case Degeneracy::Cylindrical: return "cylindrical";
    case Degeneracy::Singular: return "singular";
  }
  return "?";
}

struct DrallResult {
  double value = 0.0;  // signed; 0 when cylindrical, +-inf when singular with det != 0
  Degeneracy degeneracy = Degeneracy::Regular;
  bool developable = false;
  double numerator = 0.0;    // det(gamma', X, X')
  double denominator = 0.0;  // <X', X'>
};

namespace detail {

inline DrallResult classify_drall(double numerator, double dx_square, double dx_size,
                                  double cylindrical_tol, double dev_tol) {
  DrallResult r;
  r.numerator = numerator;
  r.denominator = dx_square;
  if (dx_size <= cylindrical_tol) {
    r.degeneracy = Degeneracy::Cylindrical;
    r.value = 0.0;
    r.developable = true;
    return r;
  }
  if (std::abs(dx_square) <= tol::null_rel * std::max(1.0, dx_size * dx_size)) {
    r.degeneracy = Degeneracy::Singular;
    const bool zero = std::abs(numerator) <= tol::null_rel * std::max(1.0, dx_size);
    r.value = zero ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), numerator);
    r.developable = zero;
    return r;
  }
  r.value = numerator / std::abs(dx_square);
  r.developable = std::abs(r.value) <= dev_tol;
  return r;
}

inline double dev_tolerance(const ParamCurve& curve) {
  return curve.mode() == DerivativeMode::Analytic ? tol::dev_analytic : tol::dev_fd;
}

}  // namespace detail

/// (c - s) kappa [x1 x3 w - theta' (x3^2 - x2^2)] / |<X', X'>|, with the
/// sign flipped for a timelike Darboux vector.
inline DrallResult drall_closed(const RulingJet& j, const RulingDirection& x, double dev_tol) {
  const double kappa = j.dd.frame.kappa;
  const double td = j.dd.theta_dot;
  const double bracket = x.x1 * x.x3 * j.w - td * (x.x3 * x.x3 - x.x2 * x.x2);
  double numerator = j.c_minus_s * kappa * bracket;
  if (j.dd.d_case == DarbouxCase::Timelike) numerator = -numerator;
  const double size = std::max({std::abs(j.dx[0]), std::abs(j.dx[1]), std::abs(j.dx[2])});
  return detail::classify_drall(numerator, j.dx_square, size, tol::cylindrical_analytic, dev_tol);
}

inline DrallResult drall_closed(const TrajectoryRuledSurface& surf, double s) {
  surf.inv.require_in_domain(s);
  return drall_closed(ruling_jet(surf, s), surf.dir, detail::dev_tolerance(surf.inv.base()));
}

struct NumericDrall {
  DrallResult drall;
  double gamma_dot_mismatch = 0.0;  // |closed gamma' - differenced gamma'|
};

inline NumericDrall drall_numeric_detail(const TrajectoryRuledSurface& surf, double s) {
  surf.inv.require_in_domain(s);
  const ParamCurve& base = surf.inv.base();
  base.require_in_domain(s, darboux_margin(base));
  const LorentzVector gamma_dot = involute_velocity(surf.inv, s);
  const LorentzVector gamma_dot_fd =
      fd::first([&](double q) { return involute_point(surf.inv, q); }, s, tol::h_low);
  const LorentzVector d = ruling(surf, s);
  const LorentzVector dd = fd::first([&](double q) { return ruling(surf, q); }, s, tol::h_low);
  NumericDrall out;
  out.drall = detail::classify_drall(triple(gamma_dot, d, dd), inner(dd, dd), max_abs(dd),
                                     tol::cylindrical_fd, tol::dev_fd);
  out.gamma_dot_mismatch = max_abs(gamma_dot - gamma_dot_fd);
  return out;
}

inline DrallResult drall_numeric(const TrajectoryRuledSurface& surf, double s) {
  return drall_numeric_detail(surf, s).drall;
}

/// theta'^2 / |w^2 + theta'^2|: the magnitude of delta(n*) / delta(b*).
/// |delta_n* / delta_b*|. The timelike case flips the sign of theta-dot^2
/// in <X', X'> for n*, hence |D|^2 - theta-dot^2 there.
inline double normal_binormal_ratio(const DarbouxData& dd) {
  const double td = dd.theta_dot;
  const double w2 = dd.d_norm * dd.d_norm;
  const double den = dd.d_case == DarbouxCase::Spacelike ? w2 + td * td : w2 - td * td;
  return td * td / std::abs(den);
}

// ---------------------------------------------------------------------------
// Developability
// ---------------------------------------------------------------------------

struct DevelopabilityVerdict {
  bool developable = false;
  std::string reason;              // what explains the verdict, "none" when not developable
  double max_abs_drall = 0.0;      // over regular samples
  double max_abs_theta_dot = 0.0;
  int regular = 0;
  int cylindrical = 0;
  int singular = 0;
  double max_normal_angle = 0.0;   // along-ruling normal spread at developable samples
  int normal_failures = 0;         // developable samples whose normals are not parallel
};

namespace detail {

// Angle between the lines spanned by a and b, or -1 when either vanishes.
inline double line_angle(const LorentzVector& a, const LorentzVector& b) {
  const double na = euclidean_norm(a);
  const double nb = euclidean_norm(b);
  if (na <= 1e-12 || nb <= 1e-12) return -1.0;
  const LorentzVector c{a.x1 * b.x2 - a.x2 * b.x1, a.x2 * b.x0 - a.x0 * b.x2,
                        a.x0 * b.x1 - a.x1 * b.x0};
  return std::atan2(euclidean_norm(c), std::abs(euclidean_dot(a, b)));
}

}  // namespace detail

/// Surface normals at (s, 0.1) and (s, 1.0); parallel on developable surfaces.
inline double ruling_normal_angle(const RulingJet& j) {
  const LorentzVector n1 = cross(j.gamma_dot + 0.1 * j.dX, j.X);
  const LorentzVector n2 = cross(j.gamma_dot + 1.0 * j.dX, j.X);
  return detail::line_angle(n1, n2);
}

inline DevelopabilityVerdict classify_developability(const TrajectoryRuledSurface& surf,
                                                     std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidConfig, "developability needs samples");
  DevelopabilityVerdict v;
  v.developable = true;
  const double dev_tol = detail::dev_tolerance(surf.inv.base());
  for (double s : samples) {
    surf.inv.require_in_domain(s);
    const RulingJet j = ruling_jet(surf, s);
    const DrallResult r = drall_closed(j, surf.dir, dev_tol);
    v.max_abs_theta_dot = std::max(v.max_abs_theta_dot, std::abs(j.dd.theta_dot));
    switch (r.degeneracy) {
      case Degeneracy::Regular:
        ++v.regular;
        v.max_abs_drall = std::max(v.max_abs_drall, std::abs(r.value));
        break;
      case Degeneracy::Cylindrical: ++v.cylindrical; break;
      case Degeneracy::Singular: ++v.singular; break;
    }
    v.developable = v.developable && r.developable;
    if (r.developable && r.degeneracy != Degeneracy::Cylindrical) {
      const double angle = ruling_normal_angle(j);
      if (angle >= 0.0) {
        v.max_normal_angle = std::max(v.max_normal_angle, angle);
        if (angle > 1e-3) ++v.normal_failures;
      }
    }
  }
  const auto& x = surf.dir;
  if (!v.developable)
    v.reason = "none";
  else if (x.x2 == 0.0 && x.x3 == 0.0)
    v.reason = "tangent-ruling";
  else if (v.cylindrical == static_cast<int>(samples.size()))
    v.reason = "cylindrical-ruling";
  else if (v.max_abs_theta_dot <= tol::helix && x.x1 * x.x3 == 0.0)
    v.reason = "general-helix";
  else if (x.x2 == 0.0)
    v.reason = "rectifying-theta-profile";
  else
    v.reason = "theta-profile";
  return v;
}

// ---------------------------------------------------------------------------
// Darboux-angle profiles that make a ruling developable
// ---------------------------------------------------------------------------

enum class ProfileKind { General, Rectifying };

/// Composite Simpson rule on [a, b] with panels no wider than `width`.
inline double simpson(const ScalarFunction& f, double a, double b, double width = 1e-3) {
  if (a == b) return 0.0;
  auto n = static_cast<long>(std::ceil(std::abs(b - a) / width));
  if (n % 2) ++n;
  n = std::max(n, 2L);
  const double h = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (long i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
  return sum * h / 3.0;
}

/// theta(s) = coeff * integral_{s0}^{s} |D| + lambda, with
/// coeff = x1 x3 / (x3^2 - x2^2) (General) or x1 / x3 (Rectifying, x2 = 0).
/// Feeding kappa = |D| cosh theta, tau = |D| sinh theta to
/// curve_from_curvature gives a curve on which the ruling x is developable.
inline ScalarFunction theta_profile(ProfileKind kind, const RulingDirection& x,
                                    ScalarFunction dnorm_fn, double lambda, double s0 = 0.0) {
  double coeff = 0.0;
  if (kind == ProfileKind::General) {
    const double den = x.x3 * x.x3 - x.x2 * x.x2;
    if (std::abs(den) <= tol::null_rel)
      throw Error(ErrorCode::DegenerateCoefficient, "x3^2 = x2^2");
    coeff = x.x1 * x.x3 / den;
  } else {
    if (std::abs(x.x2) > tol::null_rel)
      throw Error(ErrorCode::DegenerateCoefficient, "rectifying profile needs x2 = 0");
    if (std::abs(x.x3) <= tol::null_rel) throw Error(ErrorCode::DegenerateCoefficient, "x3 = 0");
    coeff = x.x1 / x.x3;
  }
  if (coeff == 0.0) return [lambda](double) { return lambda; };
  return [coeff, lambda, s0, f = std::move(dnorm_fn)](double s) {
    return coeff * simpson(f, s0, s) + lambda;
  };
}

// ---------------------------------------------------------------------------
// Striction curve
// ---------------------------------------------------------------------------

struct StrictionPoint {
  LorentzVector point;
  double offset = 0.0;          // x2 (c - s) kappa w / <X', X'>
  double offset_numeric = 0.0;  // -<gamma', X'> / <X', X'> with X' differenced
};

inline StrictionPoint striction_point(const TrajectoryRuledSurface& surf, double s) {
  surf.inv.require_in_domain(s);
  const RulingJet j = ruling_jet(surf, s);
  const double size = std::max({std::abs(j.dx[0]), std::abs(j.dx[1]), std::abs(j.dx[2])});
  if (size <= tol::cylindrical_analytic)
    throw Error(ErrorCode::CylindricalRuling, "X' = 0 at s = " + std::to_string(s));
  if (std::abs(j.dx_square) <= tol::null_rel * std::max(1.0, size * size))
    throw Error(ErrorCode::CylindricalRuling, "X' is lightlike at s = " + std::to_string(s));

  StrictionPoint p;
  p.offset = surf.dir.x2 * j.c_minus_s * j.dd.frame.kappa * j.w / j.dx_square;
  const LorentzVector dX = ruling_derivative_numeric(surf, s);
  p.offset_numeric = -inner(j.gamma_dot, dX) / inner(dX, dX);
  p.point = involute_point(surf.inv, s) + p.offset * j.X;
  return p;
}

/// True when the involute itself is the striction curve at every sample.
inline bool base_is_striction(const TrajectoryRuledSurface& surf, std::span<const double> samples) {
  for (double s : samples) {
    surf.inv.require_in_domain(s);
    const RulingJet j = ruling_jet(surf, s);
    const double size = std::max({std::abs(j.dx[0]), std::abs(j.dx[1]), std::abs(j.dx[2])});
    if (size <= tol::cylindrical_analytic) continue;
    if (std::abs(striction_point(surf, s).offset) > tol::strict) return false;
  }
  return true;
}

}  // namespace minkruled
