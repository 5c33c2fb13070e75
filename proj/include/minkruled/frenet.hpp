#pragma once

// Frenet apparatus and Darboux data of unit-speed timelike curves.
//
//   t' = kappa n,   n' = kappa t - tau b,   b' = tau n
//   D  = tau t - kappa b

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "curve.hpp"
#include "error.hpp"
#include "finite_difference.hpp"
#include "lorentz.hpp"
#include "tolerances.hpp"

namespace minkruled {

struct FrenetApparatus {
  LorentzVector t;  // unit timelike
  LorentzVector n;  // unit spacelike
  LorentzVector b;  // unit spacelike, det(t, n, b) = +1
  double kappa = 0.0;
  double tau = 0.0;
};

struct FrameDerivatives {
  LorentzVector dt;
  LorentzVector dn;
  LorentzVector db;
};

namespace detail {

struct FrameWithDerivatives {
  FrenetApparatus frame;
  FrameDerivatives d;
};

inline FrameWithDerivatives build_frame(const ParamCurve& curve, double s) {
  const auto r = curve.derivatives(s, 3);
  const LorentzVector& t = r[0];
  if (std::abs(inner(t, t) + 1.0) > tol::speed)
    throw Error(ErrorCode::NotUnitSpeed,
                "<r', r'> = " + std::to_string(inner(t, t)) + " at s = " + std::to_string(s));
  const double kappa = norm(r[1]);
  if (kappa < tol::kappa_min)
    throw Error(ErrorCode::DegenerateFrame, "curvature vanishes at s = " + std::to_string(s));
  const LorentzVector n = r[1] / kappa;

  // The unit vector orthogonal to t and n, oriented so det(t, n, b) > 0.
  LorentzVector b = cross(t, n);
  b = b / norm(b);
  const double orient = triple(t, n, b) > 0.0 ? 1.0 : -1.0;
  b = orient * b;

  const double tau = -inner(r[2], b) / kappa;

  const double dkappa = inner(r[1], r[2]) / kappa;
  const LorentzVector dn = (r[2] - dkappa * n) / kappa;
  const LorentzVector db = orient * (cross(r[1], n) + cross(t, dn));
  return {{t, n, b, kappa, tau}, {r[1], dn, db}};
}

}  // namespace detail

inline FrenetApparatus frenet_apparatus(const ParamCurve& curve, double s) {
  return detail::build_frame(curve, s).frame;
}

/// t', n', b' obtained from r'', r''' (closed-form or differenced according
/// to the curve's mode), without assuming the Frenet equations.
inline FrameDerivatives frame_derivatives(const ParamCurve& curve, double s) {
  return detail::build_frame(curve, s).d;
}

struct FrameResiduals {
  double orthonormality = 0.0;  // max deviation from the (-,+,+) Gram matrix
  double frenet = 0.0;          // max coordinate deviation from the Frenet equations
};

inline FrameResiduals frame_residuals(const FrenetApparatus& f, const FrameDerivatives& d) {
  const double ortho = std::max({std::abs(inner(f.t, f.t) + 1.0), std::abs(inner(f.n, f.n) - 1.0),
                                 std::abs(inner(f.b, f.b) - 1.0), std::abs(inner(f.t, f.n)),
                                 std::abs(inner(f.n, f.b)), std::abs(inner(f.b, f.t))});
  const double frenet = std::max({max_abs(d.dt - f.kappa * f.n),
                                  max_abs(d.dn - (f.kappa * f.t - f.tau * f.b)),
                                  max_abs(d.db - f.tau * f.n)});
  return {ortho, frenet};
}

inline FrameResiduals frame_residuals(const ParamCurve& curve, double s) {
  const auto fd = detail::build_frame(curve, s);
  return frame_residuals(fd.frame, fd.d);
}

enum class DarbouxCase {
  Spacelike,  // |kappa| > |tau|
  Timelike,   // |kappa| < |tau|
};

inline std::string to_string(DarbouxCase c) {
  return c == DarbouxCase::Spacelike ? "spacelike" : "timelike";
}

struct DarbouxAngle {
  DarbouxCase d_case = DarbouxCase::Spacelike;
  double theta = 0.0;
  double d_norm = 0.0;
};

/// theta = artanh(tau/kappa) for a spacelike Darboux vector and
/// artanh(kappa/tau) for a timelike one.
inline DarbouxAngle darboux_angle(double kappa, double tau) {
  const double gap = std::abs(kappa) - std::abs(tau);
  if (std::abs(gap) <= tol::null_rel * std::max(1.0, std::abs(kappa) + std::abs(tau)))
    throw Error(ErrorCode::NullDarboux, "|kappa| = |tau|: Darboux vector is lightlike");
  if (gap > 0.0)
    return {DarbouxCase::Spacelike, std::atanh(tau / kappa), std::sqrt(kappa * kappa - tau * tau)};
  return {DarbouxCase::Timelike, std::atanh(kappa / tau), std::sqrt(tau * tau - kappa * kappa)};
}

struct DarbouxData {
  LorentzVector D;
  CausalClass d_class;
  DarbouxCase d_case = DarbouxCase::Spacelike;
  double d_norm = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;
  LorentzVector c_unit;
  FrenetApparatus frame;
};

/// Stencil reach needed around s by darboux_data.
inline double darboux_margin(const ParamCurve& curve) {
  return fd::reach * tol::h_low + curve.derivative_margin();
}

inline DarbouxData darboux_data(const ParamCurve& curve, double s) {
  const FrenetApparatus f = frenet_apparatus(curve, s);
  const DarbouxAngle a = darboux_angle(f.kappa, f.tau);
  curve.require_in_domain(s, darboux_margin(curve));

  auto theta_at = [&](double q) {
    const FrenetApparatus g = frenet_apparatus(curve, q);
    const DarbouxAngle ag = darboux_angle(g.kappa, g.tau);
    if (ag.d_case != a.d_case)
      throw Error(ErrorCode::NullDarboux, "Darboux case changes near s = " + std::to_string(s));
    return ag.theta;
  };

  DarbouxData out;
  out.D = f.tau * f.t - f.kappa * f.b;
  out.d_class = classify(out.D);
  out.d_case = a.d_case;
  out.d_norm = a.d_norm;
  out.theta = a.theta;
  out.theta_dot = fd::first(theta_at, s, tol::h_low);
  out.c_unit = out.D / a.d_norm;
  out.frame = f;
  return out;
}

struct HelixCheck {
  bool is_helix = false;
  double deviation = 0.0;     // max |tau/kappa - median|
  double median_ratio = 0.0;
};

inline HelixCheck is_general_helix(const ParamCurve& curve, std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidConfig, "helix check needs samples");
  std::vector<double> ratio;
  ratio.reserve(samples.size());
  for (double s : samples) {
    const FrenetApparatus f = frenet_apparatus(curve, s);
    ratio.push_back(f.tau / f.kappa);
  }
  std::vector<double> sorted = ratio;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size() / 2;
  const double median = sorted.size() % 2 ? sorted[m] : 0.5 * (sorted[m - 1] + sorted[m]);
  double dev = 0.0;
  for (double q : ratio) dev = std::max(dev, std::abs(q - median));
  return {dev <= tol::helix, dev, median};
}

}  // namespace minkruled
