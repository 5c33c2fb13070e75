#pragma once

// Seeded random test curves for oracle cross-checks. Curvature and torsion
// are prescribed through |D| and the Darboux angle so the Darboux case is
// fixed over the whole domain.

#include <cmath>
#include <numbers>
#include <random>

#include "curve.hpp"
#include "frenet.hpp"
#include "ruled_surface.hpp"
#include "synthesis.hpp"

namespace minkruled {

struct RandomCurve {
  ParamCurve curve;
  DarbouxCase d_case;
  ScalarFunction kappa;
  ScalarFunction tau;
  double c = 0.0;
  Interval involute_domain;
};

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// A positively oriented orthonormal frame: a boost of rapidity beta followed
/// by a rotation by phi about the time axis.
inline FrenetApparatus random_frame(std::mt19937_64& rng) {
  const double beta = uniform(rng, -0.5, 0.5);
  const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  const double ch = std::cosh(beta), sh = std::sinh(beta);
  const double c = std::cos(phi), s = std::sin(phi);
  return {{ch, sh * c, sh * s}, {sh, ch * c, ch * s}, {0.0, -s, c}, 0.0, 0.0};
}

inline RandomCurve random_curve(std::mt19937_64& rng, DarbouxCase d_case) {
  const Interval domain{0.0, 1.5};
  const double b0 = uniform(rng, 0.3, 1.2);
  const double b1 = uniform(rng, -0.15, 0.15);
  double a0, a1, a2;
  if (d_case == DarbouxCase::Spacelike) {
    a0 = uniform(rng, -0.5, 0.5);
    a1 = uniform(rng, -0.5, 0.5);
    a2 = uniform(rng, -0.5, 0.5);
  } else {
    a0 = uniform(rng, 0.3, 1.0);
    a1 = uniform(rng, -0.05, 0.05);
    a2 = uniform(rng, -0.05, 0.05);
  }
  const double tau_sign = d_case == DarbouxCase::Timelike && uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  auto theta = [=](double s) { return a0 + s * (a1 + s * a2); };
  auto w = [=](double s) { return b0 + b1 * s; };
  ScalarFunction kappa, tau;
  if (d_case == DarbouxCase::Spacelike) {
    kappa = [=](double s) { return w(s) * std::cosh(theta(s)); };
    tau = [=](double s) { return w(s) * std::sinh(theta(s)); };
  } else {
    kappa = [=](double s) { return w(s) * std::sinh(theta(s)); };
    tau = [=](double s) { return tau_sign * w(s) * std::cosh(theta(s)); };
  }
  const FrenetApparatus frame = random_frame(rng);
  const LorentzVector origin{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
  const double c = uniform(rng, 0.0, 1.0) < 0.5 ? uniform(rng, 2.0, 3.0) : uniform(rng, -1.5, -0.5);
  return {curve_from_curvature(kappa, tau, frame, origin, domain), d_case, kappa, tau, c,
          {0.01, 1.49}};
}

/// A random ruling with |x1^2 - x2^2 + x3^2| bounded away from zero.
inline RulingDirection random_direction(std::mt19937_64& rng) {
  for (;;) {
    const double x1 = uniform(rng, -1, 1), x2 = uniform(rng, -1, 1), x3 = uniform(rng, -1, 1);
    if (std::abs(x1 * x1 - x2 * x2 + x3 * x3) >= 0.1) return make_direction(x1, x2, x3);
  }
}

/// A (direction, s) pair on `inv` whose ruling derivative is far from null,
/// so the distribution parameter is well conditioned.
struct OracleTrial {
  RulingDirection dir;
  double s = 0.0;
};

inline OracleTrial random_trial(std::mt19937_64& rng, const InvoluteCurve& inv) {
  const Interval d = inv.domain();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    OracleTrial t{random_direction(rng), uniform(rng, d.lo, d.hi)};
    const RulingJet j = ruling_jet({inv, t.dir}, t.s);
    const double size2 = j.dx[0] * j.dx[0] + j.dx[1] * j.dx[1] + j.dx[2] * j.dx[2];
    if (std::abs(j.dx_square) >= 1e-2 * std::max(1.0, size2)) return t;
  }
  throw Error(ErrorCode::IntegrationFailure, "no well-conditioned trial found");
}

}  // namespace minkruled
