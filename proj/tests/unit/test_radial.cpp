#include <gtest/gtest.h>

#include <bistat/constants.hpp>
#include <bistat/errors.hpp>
#include <bistat/radial.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace bistat;

namespace {
const double kOmega3 = 4 * std::numbers::pi;
}

TEST(FluxGradient, LinearOrderIsExact) {
  for (double r : {0.01, 0.5, 3.0}) {
    EXPECT_NEAR(flux_gradient_magnitude(r, 2.0, 1, 3), 2.0 / (kOmega3 * r * r), 1e-14 * 2.0 / (kOmega3 * r * r));
  }
}

TEST(FluxGradient, FarFieldAsymptote) {
  const double t = flux_gradient_magnitude(100.0, 1.0, 4, 3);
  const double asymptote = 1.0 / (kOmega3 * 1e4);
  EXPECT_NEAR(t, asymptote, 1e-3 * asymptote);
}

TEST(FluxGradient, NearFieldDominantBalance) {
  const double t = flux_gradient_magnitude(1e-3, 1.0, 4, 3);
  const double balance = std::pow(1.0 / ((5.0 / 16.0) * kOmega3 * 1e-6), 1.0 / 7.0);
  EXPECT_NEAR(t, balance, 0.02 * balance);
}

TEST(FluxGradient, ResidualProperty) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> logr(-8.0, 4.0);
  std::uniform_real_distribution<double> loga(-3.0, 3.0);
  std::uniform_int_distribution<int> order(1, 40);
  std::uniform_int_distribution<int> dim(3, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    const double r = std::pow(10.0, logr(rng));
    const double a = std::pow(10.0, loga(rng)) * (trial % 2 ? 1 : -1);
    const int m = order(rng);
    const int n = dim(rng);
    const auto table = taylor_coefficients(m);
    const double t = flux_gradient_magnitude(r, a, table, n);
    const double target = std::abs(a) / (sphere_measure(n) * std::pow(r, n - 1));
    ASSERT_GE(t, 0.0);
    ASSERT_LE(std::abs(table.flux(t) - target), 1e-12 * std::max(1.0, target)) << "r=" << r << " a=" << a << " m=" << m;
  }
}

TEST(FluxGradient, RejectsBadInput) {
  EXPECT_THROW(flux_gradient_magnitude(0.0, 1.0, 2, 3), InvalidArgument);
  EXPECT_THROW(flux_gradient_magnitude(1.0, 0.0, 2, 3), InvalidArgument);
  EXPECT_THROW(flux_gradient_magnitude(1.0, 1.0, 0, 3), InvalidArgument);
  EXPECT_THROW(flux_gradient_magnitude(1.0, 1.0, 2, 2), InvalidArgument);
}

TEST(ApproxProfile, NewtonianPotentialForOrderOne) {
  const auto rgrid = log_spaced(1e-3, 1e3, 200);
  const auto p = approx_radial_profile(1.0, 1, 3, rgrid);
  for (const auto& s : p.samples) {
    ASSERT_NEAR(s.u, 1.0 / (kOmega3 * s.r), 1e-10 * std::max(1.0, 1.0 / (kOmega3 * s.r))) << "r = " << s.r;
  }
  EXPECT_FALSE(p.center_value.has_value());
}

TEST(ApproxProfile, LaplacianTailDominates) {
  const std::vector<double> rgrid{1e3};
  const auto p = approx_radial_profile(1.0, 4, 3, rgrid);
  EXPECT_NEAR(p.samples[0].u * 1e3, 1.0 / kOmega3, 0.01 / kOmega3);
}

TEST(ApproxProfile, FiniteCentreUnboundedGradient) {
  const auto rgrid = log_spaced(1e-8, 10.0, 200);
  const auto p = approx_radial_profile(1.0, 4, 3, rgrid);
  ASSERT_TRUE(p.center_value.has_value());
  EXPECT_TRUE(std::isfinite(*p.center_value));
  EXPECT_NEAR(*p.center_value, 0.65677704353645066, 1e-8);
  EXPECT_GT(std::abs(p.samples.front().du), 10.0);
  for (std::size_t i = 1; i < p.samples.size(); ++i) EXPECT_LT(p.samples[i].u, p.samples[i - 1].u);
}

TEST(ApproxProfile, ReferenceValues) {
  // Reference values of u(1), -u'(1), -u'(1e-3) and u(0+) from 30-digit mpmath quadrature.
  const std::vector<double> rgrid{1e-3, 1.0};
  const auto p2 = approx_radial_profile(1.0, 2, 3, rgrid);
  EXPECT_NEAR(p2.samples[1].u, 0.0795273421485004, 1e-10);
  EXPECT_NEAR(-p2.samples[1].du, 0.07932786993533, 1e-12);
  EXPECT_NEAR(-p2.samples[0].du, 54.18030521314929, 1e-9);
  EXPECT_NEAR(*p2.center_value, 1.243969650809813707, 1e-8);
  const auto p4 = approx_radial_profile(1.0, 4, 3, rgrid);
  EXPECT_NEAR(p4.samples[1].u, 0.079527211007315375, 1e-10);
  EXPECT_NEAR(-p4.samples[0].du, 5.889559432844157, 1e-10);
}

TEST(ApproxProfile, FluxConservation) {
  const auto rgrid = log_spaced(1e-6, 1e2, 300);
  for (int m : {2, 4, 9}) {
    const auto table = taylor_coefficients(m);
    const auto p = approx_radial_profile(-1.5, m, 3, rgrid);
    for (const auto& s : p.samples) {
      const double flux = kOmega3 * s.r * s.r * table.flux(std::abs(s.du));
      ASSERT_NEAR(flux, 1.5, 1e-10 * 1.5) << "m = " << m << " r = " << s.r;
      ASSERT_GT(s.du, 0.0);
    }
  }
}

TEST(ApproxProfile, HigherOrderApproachesLightCone) {
  // Near the charge the gradient exceeds 1 and drops toward it as m grows.
  const double first = flux_gradient_magnitude(1e-3, 1.0, 2, 3);
  double previous = INFINITY;
  for (int m : {2, 4, 8, 16, 32, 64}) {
    const double t = flux_gradient_magnitude(1e-3, 1.0, m, 3);
    EXPECT_GT(t, 1.0);
    EXPECT_LT(t, previous);
    previous = t;
  }
  EXPECT_LT(previous - 1.0, 0.01 * (first - 1.0));
}

TEST(FitSingularity, OrderFourMatchesTheory) {
  const auto rgrid = log_spaced(1e-7, 1e3, 2001);
  for (double a : {1.0, -1.0}) {
    const auto p = approx_radial_profile(a, 4, 3, rgrid);
    const auto fit = fit_singularity(p);
    const auto spec = asymptotics_spec(4, 3, a);
    EXPECT_TRUE(fit.guaranteed);
    EXPECT_TRUE(fit.centered);
    EXPECT_NEAR(fit.u.exponent, 5.0 / 7.0, 0.01 * 5.0 / 7.0);
    EXPECT_NEAR(fit.u.coefficient, std::abs(spec.K), 0.02 * std::abs(spec.K));
    EXPECT_NEAR(fit.du.exponent, -2.0 / 7.0, 0.01 * 2.0 / 7.0);
    EXPECT_NEAR(fit.du.coefficient, spec.K_prime, 0.02 * spec.K_prime);
    EXPECT_EQ(fit.u.sign, a > 0 ? -1.0 : 1.0);  // u - u(0) has the sign of K
    EXPECT_GE(fit.u.samples, 8);
    EXPECT_GE(fit.u.residual, 0.0);
  }
}

TEST(FitSingularity, ShrinkingWindowImprovesExponent) {
  const auto rgrid = log_spaced(1e-9, 1e2, 3000);
  const auto p = approx_radial_profile(1.0, 4, 3, rgrid);
  double previous = INFINITY;
  for (double hi : {1e-3, 5e-4, 2.5e-4, 1.25e-4}) {
    const auto fit = fit_singularity(p, FitWindow{hi / 100.0, hi});
    const double err = std::abs(fit.u.exponent - 5.0 / 7.0);
    EXPECT_LT(err, previous) << "window top " << hi;
    previous = err;
  }
}

TEST(FitSingularity, NewtonianPoleIsUnguaranteed) {
  const auto rgrid = log_spaced(1e-7, 1e3, 2001);
  const auto fit = fit_singularity(approx_radial_profile(1.0, 1, 3, rgrid));
  EXPECT_FALSE(fit.guaranteed);
  EXPECT_FALSE(fit.centered);
  EXPECT_NEAR(fit.u.exponent, -1.0, 1e-9);
}

TEST(FitSingularity, RejectsSparseOrMisplacedWindows) {
  const auto sparse = approx_radial_profile(1.0, 4, 3, log_spaced(1e-7, 1e3, 30));
  EXPECT_THROW(fit_singularity(sparse), InvalidArgument);
  const auto dense = approx_radial_profile(1.0, 4, 3, log_spaced(1e-7, 1e3, 2001));
  EXPECT_THROW(fit_singularity(dense, FitWindow{1e-9, 1e-6}), InvalidArgument);
  EXPECT_THROW(fit_singularity(dense, FitWindow{1e-4, 1e-1}), InvalidArgument);
  EXPECT_THROW(fit_singularity(dense, FitWindow{1e-4, 1e-5}), InvalidArgument);
}

TEST(ConeTail, EnergyExamples) {
  EXPECT_NEAR(cone_tail_energy(1.0, 3), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(cone_tail_energy(0.5, 3), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(cone_tail_energy(0.5, 3) * kOmega3, best_constant_cbar(3), 1e-12);
  for (int n = 3; n <= 8; ++n) {
    const double rbar = (n - 2.0) / (n - 1.0);
    EXPECT_NEAR(cone_tail_energy(rbar, n) * sphere_measure(n), best_constant_cbar(n), 1e-12) << "N = " << n;
  }
}

TEST(ConeTail, EnergyNonDecreasing) {
  for (int n = 3; n <= 6; ++n) {
    const double lo = (n - 2.0) / (n - 1.0);
    double previous = -INFINITY;
    for (int i = 0; i < 1000; ++i) {
      const double R = lo + (1.0 - lo) * i / 999.0;
      const double e = cone_tail_energy(R, n);
      ASSERT_GE(e, previous - 1e-15) << "N = " << n << " R = " << R;
      previous = e;
    }
  }
}

TEST(ConeTail, RejectsInadmissibleKinks) {
  EXPECT_THROW(cone_tail_energy(0.4, 3), InvalidArgument);
  EXPECT_THROW(cone_tail_energy(1.1, 3), InvalidArgument);
  EXPECT_THROW(make_cone_tail(3, 0.7, 0.0), InvalidArgument);
}

TEST(ConeTail, CandidateInvariants) {
  for (int n = 3; n <= 6; ++n) {
    const double rbar = (n - 2.0) / (n - 1.0);
    for (double R : {rbar, 0.5 * (rbar + 1.0), 1.0}) {
      const auto c = make_cone_tail(n, R);
      EXPECT_LE(c.c1, std::pow(R, n - 1) / (n - 2) * (1 + 1e-14));
      EXPECT_NEAR(c.value(R * (1 - 1e-12)), c.value(R * (1 + 1e-12)), 1e-10);
    }
    const auto at_bar = make_cone_tail(n, rbar);
    EXPECT_NEAR(at_bar.c1, std::pow(rbar, n - 1) / (n - 2), 1e-14);
  }
}

TEST(SpacelikeRatio, MinimiserAttainsBestConstant) {
  EXPECT_NEAR(spacelike_ratio(make_cone_tail(3, 0.5)), best_constant_cbar(3), 1e-8);
  EXPECT_GT(spacelike_ratio(make_cone_tail(3, 0.8)), best_constant_cbar(3));
  EXPECT_NEAR(spacelike_ratio(make_cone_tail(3, 0.8)), kOmega3 * cone_tail_energy(0.8, 3), 1e-9);
}

TEST(SpacelikeRatio, InvariantUnderRescaling) {
  const double base = spacelike_ratio(make_cone_tail(3, 0.65));
  EXPECT_NEAR(spacelike_ratio(make_cone_tail(3, 0.65, 2.0)), base, 1e-10);
}

TEST(SpacelikeRatio, RandomCandidatesRespectBestConstant) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> logscale(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const double lo = (n - 2.0) / (n - 1.0);
    const double R = lo + (1.0 - lo) * unit(rng);
    const double ratio = spacelike_ratio(make_cone_tail(n, R, std::pow(10.0, logscale(rng))));
    ASSERT_GE(ratio, best_constant_cbar(n) - 1e-6) << "N = " << n << " R = " << R;
  }
}

TEST(SpacelikeRatio, ExactProfilesOnlyAndAboveBestConstant) {
  const auto rgrid = log_spaced(1e-4, 1e2, 50);
  for (double a : {0.1, 1.0, 10.0}) {
    const auto p = exact_radial_profile(a, 3, rgrid);
    EXPECT_GE(spacelike_ratio(p), best_constant_cbar(3));
  }
  EXPECT_THROW(spacelike_ratio(approx_radial_profile(1.0, 4, 3, rgrid)), InvalidArgument);
}
