#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "minkruled/frenet.hpp"
#include "minkruled/random_curves.hpp"
#include "minkruled/synthesis.hpp"
#include "test_support.hpp"

using namespace minkruled;

namespace {

ErrorCode code_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidConfig;
}

double max_residual(const LorentzVector& a, const LorentzVector& b) { return max_abs(a - b); }

}  // namespace

TEST(Synthesis, HelixConstantsRecovered) {
  const auto curve = curve_from_curvature([](double) { return 2.0 / 3.0; },
                                          [](double) { return 1.0 / 3.0; }, canonical_frame(), {},
                                          {0, std::numbers::pi});
  for (int i = 0; i <= 40; ++i) {
    const double s = std::numbers::pi * i / 40;
    const auto f = frenet_apparatus(curve, s);
    EXPECT_NEAR(f.kappa, 2.0 / 3.0, 1e-6);
    EXPECT_NEAR(f.tau, 1.0 / 3.0, 1e-6);
  }
}

TEST(Synthesis, PlanarCurveHasNoTorsion) {
  const auto curve = curve_from_curvature([](double) { return 1.0; }, [](double) { return 0.0; },
                                          canonical_frame(), {}, {0, 2});
  for (int i = 0; i <= 20; ++i) EXPECT_LE(std::abs(frenet_apparatus(curve, 0.1 * i).tau), 1e-6);
}

TEST(Synthesis, TanhTorsionRatio) {
  const auto curve = curve_from_curvature([](double) { return 1.0; },
                                          [](double s) { return std::tanh(s) / 2; }, canonical_frame(),
                                          {}, {0, 2});
  for (int i = 0; i <= 20; ++i) {
    const double s = 0.1 * i;
    const auto f = frenet_apparatus(curve, s);
    EXPECT_NEAR(f.tau / f.kappa, std::tanh(s) / 2, 1e-6);
  }
}

TEST(Synthesis, InitialFrameValidated) {
  auto k = [](double) { return 1.0; };
  auto w = [](double) { return 0.0; };
  FrenetApparatus skew = canonical_frame();
  skew.n = {0.1, 1, 0};
  EXPECT_EQ(code_of([&] { curve_from_curvature(k, w, skew, {}, {0, 1}); }),
            ErrorCode::InvalidInitialFrame);
  FrenetApparatus flipped = canonical_frame();
  flipped.b = {0, 0, -1};
  EXPECT_EQ(code_of([&] { curve_from_curvature(k, w, flipped, {}, {0, 1}); }),
            ErrorCode::InvalidInitialFrame);
}

TEST(Synthesis, VanishingCurvatureFails) {
  EXPECT_EQ(code_of([] {
              curve_from_curvature([](double s) { return 0.5 - s; }, [](double) { return 0.0; },
                                   canonical_frame(), {}, {0, 1});
            }),
            ErrorCode::IntegrationFailure);
}

// ---------------------------------------------------------------------------
// Frame/ODE properties over seeded random curves of both Darboux cases
// ---------------------------------------------------------------------------

class FrameProperty : public ::testing::TestWithParam<DarbouxCase> {};

TEST_P(FrameProperty, OrthonormalityFrenetRotationRoundTrip) {
  std::mt19937_64 rng(testing_support::kSeed + static_cast<int>(GetParam()));
  for (int trial = 0; trial < 20; ++trial) {
    const RandomCurve rc = random_curve(rng, GetParam());
    int sigma = 0;
    for (int i = 0; i <= 10; ++i) {
      const double s = 0.05 + 0.14 * i;
      const auto f = frenet_apparatus(rc.curve, s);
      const auto d = frame_derivatives(rc.curve, s);
      const auto res = frame_residuals(f, d);
      EXPECT_LE(res.orthonormality, tol::frame_analytic);
      EXPECT_LE(res.frenet, 1e-6);

      EXPECT_NEAR(f.kappa, rc.kappa(s), 1e-6 * std::max(1.0, rc.kappa(s)));
      EXPECT_NEAR(f.tau, rc.tau(s), 1e-6 * std::max(1.0, std::abs(rc.tau(s))));

      const auto dd = darboux_data(rc.curve, s);
      EXPECT_EQ(dd.d_case, GetParam());
      EXPECT_EQ(dd.d_class.kind == Causal::Spacelike, std::abs(f.kappa) > std::abs(f.tau));
      EXPECT_NEAR(dd.d_norm * dd.d_norm, std::abs(f.kappa * f.kappa - f.tau * f.tau), 1e-8);

      // One global sign for all three rotation relations.
      for (const auto& [Y, dY] : {std::pair{f.t, d.dt}, std::pair{f.n, d.dn}, std::pair{f.b, d.db}}) {
        const double plus = max_residual(dY, cross(dd.D, Y));
        const double minus = max_residual(dY, -1.0 * cross(dd.D, Y));
        const int local = plus <= minus ? +1 : -1;
        EXPECT_LE(std::min(plus, minus), 1e-6);
        if (sigma == 0) sigma = local;
        EXPECT_EQ(local, sigma);
      }

      // Closed-form theta-dot from kappa', tau' of the prescription.
      const double kp = fd::first(rc.kappa, s, 1e-4);
      const double tp = fd::first(rc.tau, s, 1e-4);
      const double k = rc.kappa(s), w = rc.tau(s);
      const double closed = GetParam() == DarbouxCase::Spacelike ? (tp * k - w * kp) / (k * k - w * w)
                                                                 : (kp * w - k * tp) / (w * w - k * k);
      EXPECT_NEAR(dd.theta_dot, closed, 1e-4);
    }
    EXPECT_EQ(sigma, -1);
  }
}

INSTANTIATE_TEST_SUITE_P(BothCases, FrameProperty,
                         ::testing::Values(DarbouxCase::Spacelike, DarbouxCase::Timelike),
                         [](const auto& info) { return to_string(info.param); });
