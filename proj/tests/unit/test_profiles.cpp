#include <gtest/gtest.h>

#include <bistat/constants.hpp>
#include <bistat/errors.hpp>
#include <bistat/profiles.hpp>

#include <cmath>
#include <numbers>

using namespace bistat;

namespace {

// int_0^inf (1 + s^{2k})^{-1/2} ds = B(1/(2k), 1/2 - 1/(2k)) / (2k)
double central_integral_oracle(int k) {
  const double p = 1.0 / (2.0 * k);
  return std::tgamma(p) * std::tgamma(0.5 - p) / std::tgamma(0.5) / (2.0 * k);
}

double omega_oracle(int n) { return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0); }

double A_oracle(int n) { return std::pow(omega_oracle(n), -1.0 / (n - 1)) * central_integral_oracle(n - 1); }

}  // namespace

TEST(ShapeConstant, ThreeDimensionsAgainstGammaIdentity) {
  const double oracle = std::pow(std::tgamma(0.25), 2) / (4.0 * std::sqrt(std::numbers::pi) * std::sqrt(4 * std::numbers::pi));
  EXPECT_NEAR(shape_constant_A(3), oracle, 1e-8);
  EXPECT_NEAR(shape_constant_A(3), 0.5230248, 1e-7);
}

TEST(ShapeConstant, HigherDimensionsAgainstBetaIdentity) {
  for (int n = 3; n <= 8; ++n) EXPECT_NEAR(shape_constant_A(n), A_oracle(n), 1e-9) << "N = " << n;
}

TEST(ShapeConstant, MatchesGenericQuadraturePath) {
  const auto r = integrate_decaying([](double s) { return 1.0 / std::sqrt(std::pow(s, 4) + 1.0); }, 0.0, 1e-12);
  EXPECT_NEAR(shape_constant_A(3), r.value / std::sqrt(sphere_measure(3)), 1e-10);
}

TEST(ShapeConstant, RejectsLowDimension) { EXPECT_THROW(shape_constant_A(2), InvalidArgument); }

TEST(RefinedConstant, ThreeDimensions) {
  const double omega = sphere_measure(3);
  const double ct = refined_constant_ctilde(3);
  EXPECT_NEAR(ct / omega, 0.097, 0.001);
  EXPECT_GE(ct, best_constant_cbar(3) / 2);
}

TEST(RefinedConstant, DualRouteThroughShapeConstant) {
  // The numerator integral equals the central integral divided by N, so
  // C~ = 1 / (N A^{N-1}).
  for (int n = 3; n <= 6; ++n) {
    const double ct = refined_constant_ctilde(n);
    EXPECT_GT(ct, 0.0);
    EXPECT_NEAR(ct, 1.0 / (n * std::pow(A_oracle(n), n - 1)), 1e-9 * ct) << "N = " << n;
    EXPECT_GE(ct, best_constant_cbar(n) / 2) << "N = " << n;
  }
}

TEST(ExactProfile, CenterValue) {
  const auto rgrid = log_spaced(1e-7, 1e3, 400);
  const auto p = exact_radial_profile(1.0, 3, rgrid);
  ASSERT_TRUE(p.center_value.has_value());
  EXPECT_NEAR(*p.center_value, A_oracle(3), 1e-6);
  EXPECT_NEAR(p.samples.front().u, A_oracle(3), 1e-6);
  EXPECT_TRUE(p.warnings.empty());
  const auto p8 = exact_radial_profile(-8.0, 3, rgrid);
  EXPECT_NEAR(*p8.center_value, -std::sqrt(8.0) * A_oracle(3), 1e-6);
}

TEST(ExactProfile, OddInTheCharge) {
  const auto rgrid = log_spaced(1e-3, 50, 60);
  const auto plus = exact_radial_profile(2.5, 4, rgrid);
  const auto minus = exact_radial_profile(-2.5, 4, rgrid);
  for (std::size_t i = 0; i < rgrid.size(); ++i) {
    EXPECT_EQ(plus.samples[i].u, -minus.samples[i].u);
    EXPECT_EQ(plus.samples[i].du, -minus.samples[i].du);
  }
}

TEST(ExactProfile, GradientAtUnitRadius) {
  const double c = 1.0 / (4 * std::numbers::pi);
  const double expected = -c / std::sqrt(1.0 + c * c);
  const std::vector<double> rgrid{1.0};
  const auto p = exact_radial_profile(1.0, 3, rgrid);
  EXPECT_NEAR(p.samples[0].du, expected, 1e-15);
  EXPECT_LT(std::abs(p.samples[0].du), 1.0);
}

TEST(ExactProfile, GradientMatchesCentredDifferencesToSecondOrder) {
  const double r = 0.7;
  double previous = INFINITY;
  for (double h : {1e-2, 5e-3, 2.5e-3}) {
    const std::vector<double> rgrid{r - h, r, r + h};
    const auto p = exact_radial_profile(1.0, 3, rgrid, QuadratureOptions{1e-14, 0.0, 60, 0.0});
    const double fd = (p.samples[2].u - p.samples[0].u) / (2 * h);
    const double err = std::abs(fd - p.samples[1].du);
    EXPECT_LT(err, previous / 3.0);
    previous = err;
  }
}

TEST(ExactProfile, FluxIdentity) {
  const auto rgrid = log_spaced(1e-2, 1e3, 1000);
  for (double a : {1.0, -3.0}) {
    const auto p = exact_radial_profile(a, 3, rgrid);
    for (const auto& s : p.samples) {
      const double flux = s.r * s.r * s.du / std::sqrt(1.0 - s.du * s.du);
      ASSERT_NEAR(flux, -a / (4 * std::numbers::pi), 1e-10) << "r = " << s.r;
    }
  }
}

TEST(ExactProfile, LightGapMatchesDirectDifference) {
  for (double r : {1e-2, 0.1, 1.0, 10.0}) {
    const double direct = 1.0 - std::abs(exact_profile_gradient(2.0, 3, r));
    EXPECT_NEAR(exact_profile_light_gap(2.0, 3, r), direct, 1e-15);
  }
  // Far below the representable range of 1 - |du|: gap ~ (r^2 w / a)^2 / 2.
  const double r = 1e-8;
  const double g = 2.0 / (4 * std::numbers::pi * r * r);
  EXPECT_NEAR(exact_profile_light_gap(2.0, 3, r), 0.5 / (g * g), 1e-12 * 0.5 / (g * g));
}

TEST(ExactProfile, LightConeApproachAndSpacelikeness) {
  const auto rgrid = log_spaced(1e-6, 1e3, 300);
  const auto p = exact_radial_profile(1.0, 3, rgrid);
  EXPECT_GT(std::abs(p.samples.front().du), 1.0 - 1e-4);
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    // |du| rounds to 1 below r ~ 3e-5; the gap carries the strict inequality.
    EXPECT_LE(std::abs(p.samples[i].du), 1.0);
    EXPECT_GT(p.samples[i].light_gap, 0.0);
    EXPECT_LT(p.samples[i].du, 0.0);
    if (i > 0) {
      EXPECT_LT(p.samples[i].u, p.samples[i - 1].u);
    }
  }
}

TEST(ExactProfile, NewtonianFarField) {
  const std::vector<double> rgrid{1e3};
  const auto p = exact_radial_profile(1.0, 3, rgrid);
  EXPECT_NEAR(p.samples[0].u * 1e3, 1.0 / (4 * std::numbers::pi), 0.01 / (4 * std::numbers::pi));
  const auto p5 = exact_radial_profile(2.0, 5, rgrid);
  EXPECT_NEAR(p5.samples[0].u * 1e9, 2.0 / (3 * omega_oracle(5)), 0.01 * 2.0 / (3 * omega_oracle(5)));
}

TEST(ExactProfile, RejectsBadInput) {
  const std::vector<double> ok{1.0, 2.0};
  EXPECT_THROW(exact_radial_profile(0.0, 3, ok), InvalidArgument);
  EXPECT_THROW(exact_radial_profile(1.0, 2, ok), InvalidArgument);
  const std::vector<double> unsorted{2.0, 1.0};
  EXPECT_THROW(exact_radial_profile(1.0, 3, unsorted), InvalidArgument);
  const std::vector<double> nonpositive{0.0, 1.0};
  EXPECT_THROW(exact_radial_profile(1.0, 3, nonpositive), InvalidArgument);
  EXPECT_THROW(exact_radial_profile(1.0, 3, std::vector<double>{}), InvalidArgument);
}

TEST(ExactProfile, CoarseGridRaisesExtrapolationWarning) {
  const std::vector<double> rgrid{0.5, 1.0, 2.0};
  const auto p = exact_radial_profile(1.0, 3, rgrid);
  EXPECT_FALSE(p.warnings.empty());
}

TEST(LogSpaced, Endpoints) {
  const auto r = log_spaced(1e-3, 10.0, 5);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(r.front(), 1e-3);
  EXPECT_EQ(r.back(), 10.0);
  EXPECT_NEAR(r[1] / r[0], r[4] / r[3], 1e-12);
  EXPECT_THROW(log_spaced(0.0, 1.0, 3), InvalidArgument);
}
