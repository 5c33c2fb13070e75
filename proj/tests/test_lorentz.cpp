#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "minkruled/lorentz.hpp"
#include "test_support.hpp"

using namespace minkruled;
using testing_support::random_vector;
using testing_support::scale_of;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const LorentzVector kT0{2.0 / kSqrt3, 0.0, 1.0 / kSqrt3};
const LorentzVector kN0{0.0, 1.0, 0.0};
const LorentzVector kB0{1.0 / kSqrt3, 0.0, 2.0 / kSqrt3};

void expect_vec(const LorentzVector& got, const LorentzVector& want, double eps) {
  EXPECT_NEAR(got.x0, want.x0, eps);
  EXPECT_NEAR(got.x1, want.x1, eps);
  EXPECT_NEAR(got.x2, want.x2, eps);
}

}  // namespace

TEST(Inner, BasisValues) {
  EXPECT_DOUBLE_EQ(inner({1, 0, 0}, {1, 0, 0}), -1.0);
  EXPECT_DOUBLE_EQ(inner({0, 1, 0}, {0, 0, 1}), 0.0);
  EXPECT_NEAR(inner(kT0, kT0), -1.0, 1e-15);
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm({0, 0, 0}), 0.0);
  EXPECT_EQ(norm({1, 1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(norm({0, 3, 4}), 5.0);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({1, 0, 0}), (CausalClass{Causal::Timelike, Orientation::Positive}));
  EXPECT_EQ(classify({-2, 0, 1}), (CausalClass{Causal::Timelike, Orientation::Negative}));
  EXPECT_EQ(classify({0, 1, 0}).kind, Causal::Spacelike);
  EXPECT_EQ(classify({1, 1, 0}).kind, Causal::Lightlike);
}

TEST(Classify, ToleranceScalesWithMagnitude) {
  // 1e6 (1, 1 + 1e-12, 0): relative gap far below the null threshold.
  EXPECT_EQ(classify({1e6, 1e6 * (1.0 + 1e-12), 0}).kind, Causal::Lightlike);
  EXPECT_EQ(classify({1.0, 1.0 + 1e-6, 0}).kind, Causal::Spacelike);
}

TEST(Cross, Examples) {
  expect_vec(cross({0, 1, 0}, {0, 0, 1}), {-1, 0, 0}, 0.0);
  expect_vec(cross({1, 0, 0}, {1, 0, 0}), {0, 0, 0}, 0.0);
  expect_vec(cross(kT0, kN0), kB0, 1e-15);
}

TEST(Cross, LiteralFormulaIsNotLorentzOrthogonal) {
  // The coordinate formula with the middle sign flipped loses orthogonality.
  const LorentzVector u{1, 1, 0}, v{0, 0, 1};
  EXPECT_NEAR(inner(cross_literal(u, v), u), 2.0, 1e-15);
  EXPECT_NEAR(inner(cross(u, v), u), 0.0, 1e-15);
  expect_vec(cross_literal({0, 1, 0}, {0, 0, 1}), {-1, 0, 0}, 0.0);
}

TEST(Triple, Examples) {
  EXPECT_EQ(triple({1, 0, 0}, {0, 1, 0}, {0, 0, 1}), 1.0);
  EXPECT_EQ(triple({1, 0, 0}, {1, 0, 0}, {0, 0, 1}), 0.0);
  EXPECT_EQ(triple({2, 0, 0}, {0, 3, 0}, {0, 0, 4}), 24.0);
}

TEST(LorentzAngle, Examples) {
  const auto a = lorentz_angle({0, 1, 0}, {0, 0, 1});
  EXPECT_EQ(a.kind, AngleKind::SpacelikePlane);
  EXPECT_NEAR(a.value, std::numbers::pi / 2, 1e-15);

  const auto b = lorentz_angle({std::sinh(1.0), std::cosh(1.0), 0}, {1, 0, 0});
  EXPECT_EQ(b.kind, AngleKind::SpacelikeTimelike);
  EXPECT_NEAR(b.value, 1.0, 1e-12);

  const auto c = lorentz_angle({1, 0, 0}, {std::cosh(1.0), std::sinh(1.0), 0});
  EXPECT_EQ(c.kind, AngleKind::TimelikeTimelike);
  EXPECT_NEAR(c.value, 1.0, 1e-7);
}

TEST(LorentzAngle, SpacelikePairSpanningTimelikePlane) {
  // (0,1,0) and (sinh 1, cosh 1, 0) span the x0-x1 plane.
  const auto a = lorentz_angle({0, 1, 0}, {std::sinh(1.0), std::cosh(1.0), 0});
  EXPECT_EQ(a.kind, AngleKind::SpacelikeTimelikePlane);
  EXPECT_EQ(a.plane_class, Causal::Timelike);
  EXPECT_NEAR(a.value, 1.0, 1e-7);
}

TEST(LorentzAngle, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidConfig;
  };
  EXPECT_EQ(code([] { lorentz_angle({1, 1, 0}, {0, 1, 0}); }), ErrorCode::NullInput);
  EXPECT_EQ(code([] { lorentz_angle({0, 1, 0}, {0, 2, 0}); }), ErrorCode::DegeneratePlane);
  EXPECT_EQ(code([] { lorentz_angle({1, 0, 0}, {-1, 0, 0}); }), ErrorCode::OrientationMismatch);
}

// ---------------------------------------------------------------------------
// Properties over seeded random vectors
// ---------------------------------------------------------------------------

TEST(LorentzProperty, InnerIsSymmetricAndBilinear) {
  std::mt19937_64 rng(testing_support::kSeed);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_vector(rng), w = random_vector(rng), v = random_vector(rng);
    const double a = coef(rng), b = coef(rng);
    const double scale = scale_of(a * u + b * w) * scale_of(v);
    EXPECT_NEAR(inner(u, v), inner(v, u), 1e-12 * scale);
    EXPECT_NEAR(inner(a * u + b * w, v), a * inner(u, v) + b * inner(w, v), 1e-12 * scale);
  }
}

TEST(LorentzProperty, CrossIsAntisymmetricAndOrthogonal) {
  std::mt19937_64 rng(testing_support::kSeed + 1);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_vector(rng), v = random_vector(rng);
    const double scale = scale_of(u) * scale_of(v);
    expect_vec(cross(u, v), -1.0 * cross(v, u), 1e-12 * scale);
    EXPECT_NEAR(inner(cross(u, v), u), 0.0, 1e-12 * scale);
    EXPECT_NEAR(inner(cross(u, v), v), 0.0, 1e-12 * scale);
  }
}

TEST(LorentzProperty, NegationFlipsOrientationOnly) {
  std::mt19937_64 rng(testing_support::kSeed + 2);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_vector(rng);
    const auto a = classify(u), b = classify(-1.0 * u);
    EXPECT_EQ(a.kind, b.kind);
    if (a.kind == Causal::Timelike) {
      EXPECT_NE(a.orientation, b.orientation);
    }
  }
}

TEST(LorentzProperty, TripleIsCyclicAndAlternating) {
  std::mt19937_64 rng(testing_support::kSeed + 3);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_vector(rng), v = random_vector(rng), w = random_vector(rng);
    const double t = triple(u, v, w);
    EXPECT_NEAR(triple(v, w, u), t, 1e-12 * 100);
    EXPECT_NEAR(triple(v, u, w), -t, 1e-12 * 100);
    EXPECT_NEAR(triple(u, u, w), 0.0, 1e-12);
  }
}

TEST(LorentzProperty, AngleIsSymmetric) {
  std::mt19937_64 rng(testing_support::kSeed + 4);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto u = random_vector(rng), v = random_vector(rng);
    try {
      const auto a = lorentz_angle(u, v);
      const auto b = lorentz_angle(v, u);
      EXPECT_EQ(a.kind, b.kind);
      EXPECT_NEAR(a.value, b.value, 1e-9 * std::max(1.0, a.value));
      if (a.kind == AngleKind::SpacelikePlane) {
        EXPECT_GE(a.value, 0.0);
        EXPECT_LE(a.value, std::numbers::pi);
      } else {
        EXPECT_GE(a.value, 0.0);
      }
      ++checked;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(checked, 500);
}
