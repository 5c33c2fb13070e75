#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finite_difference.hpp"
#include "lorentz.hpp"
#include "tolerances.hpp"

namespace minkruled {

enum class DerivativeMode { Analytic, FiniteDifference };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double s) const { return s >= lo && s <= hi; }
  double length() const { return hi - lo; }
};

/// A parametrized curve s -> r(s) in Minkowski space, optionally carrying
/// closed-form derivatives of orders 1..3. Intended for unit-speed timelike
/// curves; unit speed is checked where frames are built, never repaired.
class ParamCurve {
 public:
  using Evaluator = std::function<LorentzVector(double)>;

  ParamCurve(Evaluator position, std::array<Evaluator, 3> derivatives, Interval domain,
             DerivativeMode mode)
      : position_(std::move(position)),
        derivatives_(std::move(derivatives)),
        domain_(domain),
        mode_(mode) {
    if (!position_) throw Error(ErrorCode::InvalidConfig, "curve needs a position evaluator");
    if (!(domain_.lo < domain_.hi) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi))
      throw Error(ErrorCode::OutOfDomain, "curve domain must satisfy lo < hi");
  }

  ParamCurve(Evaluator position, Interval domain)
      : ParamCurve(std::move(position), {}, domain, DerivativeMode::FiniteDifference) {}

  const Interval& domain() const { return domain_; }
  DerivativeMode mode() const { return mode_; }

  bool has_analytic(int order) const {
    return order >= 1 && order <= 3 && static_cast<bool>(derivatives_[order - 1]);
  }

  ParamCurve with_mode(DerivativeMode mode) const {
    ParamCurve copy = *this;
    copy.mode_ = mode;
    return copy;
  }

  LorentzVector position(double s) const {
    require_in_domain(s, 0.0);
    return position_(s);
  }

  /// r'(s) .. r^(order)(s).
  std::vector<LorentzVector> derivatives(double s, int order) const {
    if (order < 1 || order > 3)
      throw Error(ErrorCode::InvalidConfig, "derivative order must be in 1..3");
    std::vector<LorentzVector> out;
    out.reserve(static_cast<std::size_t>(order));
    if (mode_ == DerivativeMode::Analytic) {
      require_in_domain(s, 0.0);
      for (int k = 1; k <= order; ++k) {
        if (!has_analytic(k))
          throw Error(ErrorCode::MissingAnalyticDerivative,
                      "no closed-form derivative of order " + std::to_string(k));
        out.push_back(derivatives_[k - 1](s));
      }
      return out;
    }
    const double h3 = order >= 3 ? tol::h_third : tol::h_low;
    require_in_domain(s, fd::reach * std::max(tol::h_low, h3));
    auto r = [this](double q) { return position_(q); };
    out.push_back(fd::first(r, s, tol::h_low));
    if (order >= 2) out.push_back(fd::second(r, s, tol::h_low));
    if (order >= 3) out.push_back(fd::third(r, s, tol::h_third));
    return out;
  }

  /// Largest stencil reach used by derivatives(s, 3) in the current mode.
  double derivative_margin() const {
    return mode_ == DerivativeMode::Analytic ? 0.0 : fd::reach * tol::h_third;
  }

  void require_in_domain(double s, double margin) const {
    if (!(s - margin >= domain_.lo && s + margin <= domain_.hi))
      throw Error(ErrorCode::OutOfDomain,
                  "s = " + std::to_string(s) + " (margin " + std::to_string(margin) +
                      ") outside [" + std::to_string(domain_.lo) + ", " +
                      std::to_string(domain_.hi) + "]");
  }

 private:
  Evaluator position_;
  std::array<Evaluator, 3> derivatives_;
  Interval domain_;
  DerivativeMode mode_;
};

inline std::vector<LorentzVector> derivatives(const ParamCurve& curve, double s, int order) {
  return curve.derivatives(s, order);
}

/// The unit-speed timelike helix r(s) = (2 sinh(s/sqrt3), 2 cosh(s/sqrt3), s/sqrt3)
/// with kappa = 2/3, tau = 1/3 and a spacelike Darboux vector.
inline ParamCurve reference_helix(DerivativeMode mode = DerivativeMode::Analytic,
                              Interval domain = {-10.0, 10.0}) {
  static const double k = 1.0 / std::sqrt(3.0);
  return ParamCurve(
      [](double s) {
        return LorentzVector{2.0 * std::sinh(k * s), 2.0 * std::cosh(k * s), k * s};
      },
      {
          [](double s) {
            return LorentzVector{2.0 * k * std::cosh(k * s), 2.0 * k * std::sinh(k * s), k};
          },
          [](double s) {
            return LorentzVector{2.0 / 3.0 * std::sinh(k * s), 2.0 / 3.0 * std::cosh(k * s), 0.0};
          },
          [](double s) {
            return LorentzVector{2.0 / 3.0 * k * std::cosh(k * s), 2.0 / 3.0 * k * std::sinh(k * s),
                                 0.0};
          },
      },
      domain, mode);
}

}  // namespace minkruled
