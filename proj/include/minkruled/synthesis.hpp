#pragma once

// Curves from prescribed curvature and torsion: the Frenet system together
// with r' = t is integrated by fixed-step RK4, re-orthonormalizing the frame
// after every step. Evaluation between nodes takes one partial RK4 step from
// the node below, so the result is continuous and accurate to the
// integrator's local error.

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "curve.hpp"
#include "error.hpp"
#include "finite_difference.hpp"
#include "frenet.hpp"
#include "lorentz.hpp"
#include "tolerances.hpp"

namespace minkruled {

using ScalarFunction = std::function<double(double)>;

namespace detail {

struct FrenetState {
  LorentzVector r, t, n, b;
};

inline FrenetState axpy(const FrenetState& y, double h, const FrenetState& k) {
  return {y.r + h * k.r, y.t + h * k.t, y.n + h * k.n, y.b + h * k.b};
}

/// Gram-Schmidt in the (-,+,+) metric, starting from the timelike t.
inline void reorthonormalize(FrenetState& y) {
  y.t = y.t / norm(y.t);
  y.n = y.n + inner(y.n, y.t) * y.t;
  y.n = y.n / norm(y.n);
  y.b = y.b + inner(y.b, y.t) * y.t - inner(y.b, y.n) * y.n;
  y.b = y.b / norm(y.b);
}

class FrenetTable {
 public:
  FrenetTable(ScalarFunction kappa, ScalarFunction tau, const FrenetState& start, Interval domain)
      : kappa_(std::move(kappa)), tau_(std::move(tau)), domain_(domain) {
    const auto steps = static_cast<std::size_t>(std::ceil(domain.length() / tol::integrator_step));
    h_ = domain.length() / static_cast<double>(steps);
    nodes_.reserve(steps + 1);
    nodes_.push_back(start);
    for (std::size_t i = 0; i < steps; ++i) {
      FrenetState next = step(nodes_.back(), domain.lo + static_cast<double>(i) * h_, h_);
      if (!(next.r.is_finite() && next.t.is_finite() && next.n.is_finite() && next.b.is_finite()))
        throw Error(ErrorCode::IntegrationFailure,
                    "non-finite state at s = " + std::to_string(domain.lo + (i + 1) * h_));
      nodes_.push_back(next);
    }
  }

  FrenetState at(double s) const {
    const double u = (s - domain_.lo) / h_;
    auto i = static_cast<std::size_t>(std::max(0.0, std::floor(u)));
    i = std::min(i, nodes_.size() - 2);
    const double s_i = domain_.lo + static_cast<double>(i) * h_;
    if (s == s_i) return nodes_[i];
    return step(nodes_[i], s_i, s - s_i);
  }

  double kappa(double s) const { return kappa_(s); }
  double tau(double s) const { return tau_(s); }

 private:
  FrenetState rhs(const FrenetState& y, double s) const {
    const double k = kappa_(s);
    const double w = tau_(s);
    if (!(k >= tol::kappa_min) || !std::isfinite(w))
      throw Error(ErrorCode::IntegrationFailure,
                  "curvature below minimum or torsion not finite at s = " + std::to_string(s));
    return {y.t, k * y.n, k * y.t - w * y.b, w * y.n};
  }

  FrenetState step(const FrenetState& y, double s, double h) const {
    const FrenetState k1 = rhs(y, s);
    const FrenetState k2 = rhs(axpy(y, 0.5 * h, k1), s + 0.5 * h);
    const FrenetState k3 = rhs(axpy(y, 0.5 * h, k2), s + 0.5 * h);
    const FrenetState k4 = rhs(axpy(y, h, k3), s + h);
    FrenetState out{y.r + (h / 6.0) * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r),
                    y.t + (h / 6.0) * (k1.t + 2.0 * k2.t + 2.0 * k3.t + k4.t),
                    y.n + (h / 6.0) * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n),
                    y.b + (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b)};
    reorthonormalize(out);
    return out;
  }

  ScalarFunction kappa_;
  ScalarFunction tau_;
  Interval domain_;
  double h_ = 0.0;
  std::vector<FrenetState> nodes_;
};

}  // namespace detail

inline FrenetApparatus canonical_frame() {
  return {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, 0.0, 0.0};
}

/// Integrates the Frenet system from `initial_frame` at `domain.lo`.
/// The frame must be orthonormal in the (-,+,+) metric and positively
/// oriented (det(t, n, b) = +1); its kappa and tau fields are ignored.
/// The returned curve carries closed-form derivatives built from the
/// integrated frame: r' = t, r'' = kappa n, r''' = kappa' n + kappa n'.
inline ParamCurve curve_from_curvature(ScalarFunction kappa_fn, ScalarFunction tau_fn,
                                       const FrenetApparatus& initial_frame,
                                       const LorentzVector& initial_point, Interval domain) {
  if (!kappa_fn || !tau_fn)
    throw Error(ErrorCode::InvalidConfig, "curvature and torsion functions are required");
  if (!(domain.lo < domain.hi))
    throw Error(ErrorCode::OutOfDomain, "integration domain must satisfy lo < hi");
  const FrenetApparatus& f = initial_frame;
  const double ortho = std::max({std::abs(inner(f.t, f.t) + 1.0), std::abs(inner(f.n, f.n) - 1.0),
                                 std::abs(inner(f.b, f.b) - 1.0), std::abs(inner(f.t, f.n)),
                                 std::abs(inner(f.n, f.b)), std::abs(inner(f.b, f.t))});
  if (ortho > tol::frame_analytic)
    throw Error(ErrorCode::InvalidInitialFrame,
                "initial frame is not orthonormal (residual " + std::to_string(ortho) + ")");
  if (triple(f.t, f.n, f.b) < 0.0)
    throw Error(ErrorCode::InvalidInitialFrame, "initial frame is negatively oriented");

  auto table = std::make_shared<const detail::FrenetTable>(
      std::move(kappa_fn), std::move(tau_fn), detail::FrenetState{initial_point, f.t, f.n, f.b},
      domain);

  auto pos = [table](double s) { return table->at(s).r; };
  auto d1 = [table](double s) { return table->at(s).t; };
  auto d2 = [table](double s) { return table->kappa(s) * table->at(s).n; };
  auto d3 = [table, domain](double s) {
    const detail::FrenetState y = table->at(s);
    const double k = table->kappa(s);
    const double w = table->tau(s);
    // kappa' from the prescribed function; one-sided near the domain ends.
    const double h = tol::h_low;
    double dk = 0.0;
    if (s - 2 * h >= domain.lo && s + 2 * h <= domain.hi)
      dk = fd::first([&](double q) { return table->kappa(q); }, s, h);
    else if (s - 2 * h < domain.lo)
      dk = (-3.0 * table->kappa(s) + 4.0 * table->kappa(s + h) - table->kappa(s + 2 * h)) / (2 * h);
    else
      dk = (3.0 * table->kappa(s) - 4.0 * table->kappa(s - h) + table->kappa(s - 2 * h)) / (2 * h);
    return dk * y.n + k * (k * y.t - w * y.b);
  };
  return ParamCurve(pos, {d1, d2, d3}, domain, DerivativeMode::Analytic);
}

}  // namespace minkruled
