#pragma once

// Spacelike involute gamma(s) = r(s) + (c - s) t(s) of a timelike curve and
// its Frenet frame expressed through the base frame and the Darboux angle.

#include <array>
#include <cmath>
#include <string>

#include "curve.hpp"
#include "error.hpp"
#include "frenet.hpp"
#include "lorentz.hpp"
#include "tolerances.hpp"

namespace minkruled {

/// The involute with constant c, restricted to a parameter interval that
/// stays at least tol::cusp away from the cusp at s = c.
class InvoluteCurve {
 public:
  InvoluteCurve(ParamCurve base, double c_const, Interval domain)
      : base_(std::move(base)), c_(c_const), domain_(domain) {
    if (!(domain_.lo < domain_.hi))
      throw Error(ErrorCode::OutOfDomain, "involute domain must satisfy lo < hi");
    if (domain_.lo < base_.domain().lo || domain_.hi > base_.domain().hi)
      throw Error(ErrorCode::OutOfDomain, "involute domain exceeds the base curve domain");
    if (domain_.lo - tol::cusp < c_ && c_ < domain_.hi + tol::cusp)
      throw Error(ErrorCode::OutOfDomain, "involute domain reaches the cusp at s = c = " +
                                              std::to_string(c_));
  }

  InvoluteCurve(ParamCurve base, double c_const)
      : InvoluteCurve(base, c_const, cusp_free_part(base.domain(), c_const)) {}

  const ParamCurve& base() const { return base_; }
  double c() const { return c_; }
  const Interval& domain() const { return domain_; }

  void require_in_domain(double s) const {
    if (!domain_.contains(s))
      throw Error(ErrorCode::OutOfDomain, "s = " + std::to_string(s) + " outside the involute domain");
  }

 private:
  // The larger side of the base domain once the cusp neighbourhood is removed.
  static Interval cusp_free_part(Interval d, double c) {
    if (c <= d.lo - tol::cusp || c >= d.hi + tol::cusp) return d;
    const Interval left{d.lo, c - 1.5 * tol::cusp};
    const Interval right{c + 1.5 * tol::cusp, d.hi};
    return left.length() >= right.length() ? left : right;
  }

  ParamCurve base_;
  double c_;
  Interval domain_;
};

/// Point on the involute. Valid anywhere on the base curve domain; at s = c
/// it coincides with the base curve.
inline LorentzVector involute_point(const InvoluteCurve& inv, double s) {
  const ParamCurve& base = inv.base();
  const LorentzVector t = base.derivatives(s, 1)[0];
  return base.position(s) + (inv.c() - s) * t;
}

inline LorentzVector involute_velocity(const InvoluteCurve& inv, double s) {
  const FrenetApparatus f = frenet_apparatus(inv.base(), s);
  return (inv.c() - s) * f.kappa * f.n;
}

struct InvoluteFrame {
  LorentzVector t_star;
  LorentzVector n_star;
  LorentzVector b_star;
  DarbouxCase d_case = DarbouxCase::Spacelike;

  /// Expected <e,e> for (t*, n*, b*): (+1, -1, +1) with a spacelike Darboux
  /// vector, (+1, +1, -1) with a timelike one.
  std::array<double, 3> signature() const {
    return d_case == DarbouxCase::Spacelike ? std::array{1.0, -1.0, 1.0}
                                            : std::array{1.0, 1.0, -1.0};
  }

  double orthonormality_residual() const {
    const auto sig = signature();
    return std::max({std::abs(inner(t_star, t_star) - sig[0]),
                     std::abs(inner(n_star, n_star) - sig[1]),
                     std::abs(inner(b_star, b_star) - sig[2]), std::abs(inner(t_star, n_star)),
                     std::abs(inner(n_star, b_star)), std::abs(inner(b_star, t_star))});
  }

  LorentzVector combine(double x1, double x2, double x3) const {
    return x1 * t_star + x2 * n_star + x3 * b_star;
  }
};

inline InvoluteFrame involute_frame(const DarbouxData& dd) {
  const FrenetApparatus& f = dd.frame;
  const double ch = std::cosh(dd.theta);
  const double sh = std::sinh(dd.theta);
  if (dd.d_case == DarbouxCase::Spacelike)
    return {f.n, -ch * f.t + sh * f.b, -sh * f.t + ch * f.b, dd.d_case};
  return {f.n, sh * f.t - ch * f.b, -ch * f.t + sh * f.b, dd.d_case};
}

/// The involute frame does not depend on c.
inline InvoluteFrame involute_frame(const InvoluteCurve& inv, double s) {
  return involute_frame(darboux_data(inv.base(), s));
}

/// The same matrices without theta-dot, for callers that only need the
/// frame and have no room for the theta stencil.
inline InvoluteFrame involute_frame_pointwise(const ParamCurve& base, double s) {
  const FrenetApparatus f = frenet_apparatus(base, s);
  const DarbouxAngle a = darboux_angle(f.kappa, f.tau);
  DarbouxData dd;
  dd.frame = f;
  dd.theta = a.theta;
  dd.d_case = a.d_case;
  return involute_frame(dd);
}

}  // namespace minkruled
