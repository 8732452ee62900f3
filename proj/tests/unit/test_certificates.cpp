#include <gtest/gtest.h>

#include <bistat/certificates.hpp>
#include <bistat/constants.hpp>
#include <bistat/errors.hpp>
#include <bistat/profiles.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace bistat;

namespace {

const double kOmega3 = 4 * std::numbers::pi;

ChargeConfig dipole(double distance, double a1 = 1.0, double a2 = -1.0, int dim = 3) {
  std::vector<double> x1(dim, 0.0), x2(dim, 0.0);
  x2[0] = distance;
  return ChargeConfig(dim, {PointCharge{x1, a1}, PointCharge{x2, a2}});
}

ChargeConfig random_config(std::mt19937& rng, int n, int dim) {
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> mag(0.1, 3.0);
  std::vector<PointCharge> charges;
  for (int k = 0; k < n; ++k) {
    std::vector<double> x(dim);
    for (double& c : x) c = pos(rng);
    charges.push_back(PointCharge{x, (rng() % 2 ? 1.0 : -1.0) * mag(rng)});
  }
  return ChargeConfig(dim, charges);
}

}  // namespace

TEST(ChargeConfig, Validation) {
  EXPECT_THROW(ChargeConfig(2, {PointCharge{{0, 0}, 1.0}}), InvalidArgument);
  EXPECT_THROW(ChargeConfig(3, {}), InvalidArgument);
  EXPECT_THROW(ChargeConfig(3, {PointCharge{{0, 0, 0}, 0.0}}), InvalidArgument);
  EXPECT_THROW(ChargeConfig(3, {PointCharge{{0, 0}, 1.0}}), InvalidArgument);
  EXPECT_THROW(ChargeConfig(3, {PointCharge{{0, 0, 0}, 1.0}, PointCharge{{0, 0, 0}, -1.0}}), InvalidArgument);
  EXPECT_THROW(ChargeConfig(3, {PointCharge{{0, NAN, 0}, 1.0}}), InvalidArgument);
  const ChargeConfig c(3, {PointCharge{{0, 0, 0}, 1.0}, PointCharge{{3, 4, 0}, -2.0}, PointCharge{{0, 0, 1}, 0.5}});
  EXPECT_DOUBLE_EQ(c.min_distance(), 1.0);
  EXPECT_DOUBLE_EQ(c.distance(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(c.positive_total(), 1.5);
  EXPECT_DOUBLE_EQ(c.negative_total(), 2.0);
  EXPECT_EQ(c.positive_indices(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(c.negative_indices(), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(std::isinf(ChargeConfig(3, {PointCharge{{0, 0, 0}, 1.0}}).min_distance()));
}

TEST(CheckGlobal, UnitDipoleThreshold) {
  const double lhs = std::sqrt(3.0 / kOmega3) * 2.0 * 2.0;
  const auto at2 = check_global(dipole(2.0));
  EXPECT_NEAR(at2.lhs, lhs, 1e-14);
  EXPECT_NEAR(at2.lhs, 1.95441, 1e-5);
  EXPECT_EQ(at2.level, VerdictLevel::GlobalClassical);
  EXPECT_GT(at2.margin, 0.0);
  const auto at15 = check_global(dipole(1.5));
  EXPECT_EQ(at15.level, VerdictLevel::Inconclusive);
  EXPECT_LT(at15.margin, 0.0);
}

TEST(CheckGlobal, SingleChargeSentinel) {
  const auto v = check_global(ChargeConfig(3, {PointCharge{{1, 2, 3}, -4.0}}));
  EXPECT_EQ(v.level, VerdictLevel::GlobalClassical);
  EXPECT_TRUE(std::isinf(v.margin) && v.margin > 0);
}

TEST(CheckGlobal, EmptySignClassContributesZero) {
  const auto v = check_global(dipole(10.0, 1.0, 3.0));
  const double factor = std::sqrt(3.0 / kOmega3) * 2.0;
  EXPECT_NEAR(v.lhs, factor * std::sqrt(4.0), 1e-14);
}

TEST(CheckRefined, PublishedConstant) {
  const double ct = 0.097 * kOmega3;
  const auto v = check_refined(dipole(2.0), ct);
  EXPECT_NEAR(v.lhs, 2.0 / std::sqrt(ct), 1e-14);
  EXPECT_NEAR(v.lhs, 1.81150, 1e-5);
  const auto at19 = check_refined(dipole(1.9), ct);
  EXPECT_EQ(at19.level, VerdictLevel::GlobalClassical);
  EXPECT_EQ(check_global(dipole(1.9)).level, VerdictLevel::Inconclusive);
  ASSERT_EQ(at19.per_segment.size(), 1u);
  EXPECT_EQ(at19.per_segment[0].level, VerdictLevel::SegmentClassical);
}

TEST(CheckRefined, RejectsNonPositiveConstant) {
  EXPECT_THROW(check_refined(dipole(2.0), 0.0), InvalidArgument);
  EXPECT_THROW(check_refined(dipole(2.0), -1.0), InvalidArgument);
}

TEST(CheckRefined, NeverWeakerThanGlobal) {
  std::mt19937 rng(5);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = random_config(rng, 2 + trial % 4, n);
      EXPECT_LE(check_refined(c).lhs, check_global(c).lhs * (1 + 1e-14));
    }
  }
}

TEST(CheckRefined, PerSegmentComparisons) {
  const ChargeConfig c(3, {PointCharge{{0, 0, 0}, 1.0}, PointCharge{{1.0, 0, 0}, -1.0}, PointCharge{{10, 0, 0}, 1.0}});
  const auto v = check_refined(c);
  EXPECT_EQ(v.level, VerdictLevel::Inconclusive);
  ASSERT_EQ(v.per_segment.size(), 3u);
  EXPECT_EQ(v.per_segment[0].level, VerdictLevel::Inconclusive);
  EXPECT_EQ(v.per_segment[1].level, VerdictLevel::SegmentClassical);
  EXPECT_EQ(v.per_segment[2].level, VerdictLevel::SegmentClassical);
}

TEST(CheckTwoCharge, Thresholds) {
  const double twoA = 2.0 * std::pow(std::tgamma(0.25), 2) / (4.0 * std::sqrt(std::numbers::pi) * std::sqrt(kOmega3));
  const auto v = check_two_charge(dipole(1.2));
  EXPECT_NEAR(v.lhs, twoA, 1e-9);
  EXPECT_NEAR(v.lhs, 1.04605, 1e-5);
  EXPECT_EQ(v.level, VerdictLevel::TwoChargeClassical);
  EXPECT_EQ(check_two_charge(dipole(1.0)).level, VerdictLevel::Inconclusive);
}

TEST(CheckTwoCharge, NotApplicable) {
  EXPECT_THROW(check_two_charge(dipole(3.0, 1.0, 1.0)), NotApplicable);
  EXPECT_THROW(check_two_charge(ChargeConfig(3, {PointCharge{{0, 0, 0}, 1.0}})), NotApplicable);
  const ChargeConfig three(3, {PointCharge{{0, 0, 0}, 1.0}, PointCharge{{4, 0, 0}, -1.0}, PointCharge{{8, 0, 0}, 1.0}});
  EXPECT_THROW(check_two_charge(three), NotApplicable);
}

TEST(CheckTwoCharge, SharperThanGlobalInEveryDimension) {
  for (int n = 3; n <= 6; ++n) {
    const auto c = dipole(100.0, 1.0, -1.0, n);
    EXPECT_LE(check_two_charge(c).lhs, check_global(c).lhs) << "N = " << n;
    const double direct = std::pow(2.0 / best_constant_cbar(n), 1.0 / (n - 1)) * 2.0;
    EXPECT_NEAR(check_global(c).lhs, direct, 1e-12 * direct) << "N = " << n;
  }
}

TEST(ClassifySegments, SameSignPairsAreUnconditional) {
  const ChargeConfig c(3, {PointCharge{{0, 0, 0}, 1.0}, PointCharge{{0.01, 0, 0}, 2.0}, PointCharge{{5, 0, 0}, -1.0}});
  const auto s = classify_segments(c);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].j, 0u);
  EXPECT_EQ(s[0].l, 1u);
  EXPECT_EQ(s[0].level, VerdictLevel::SameSignSegment);
  EXPECT_TRUE(std::isinf(s[0].margin));
  EXPECT_NE(s[1].level, VerdictLevel::SameSignSegment);
}

TEST(ClassifySegments, FarDipoleAndSingleCharge) {
  const auto s = classify_segments(dipole(50.0));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].level, VerdictLevel::SegmentClassical);
  EXPECT_TRUE(classify_segments(ChargeConfig(3, {PointCharge{{0, 0, 0}, 1.0}})).empty());
}

TEST(Summarize, PicksStrongestRule) {
  EXPECT_EQ(summarize(dipole(2.0)).level, VerdictLevel::GlobalClassical);
  EXPECT_EQ(summarize(dipole(1.9)).level, VerdictLevel::GlobalClassical);
  EXPECT_EQ(summarize(dipole(1.2)).level, VerdictLevel::TwoChargeClassical);
  EXPECT_EQ(summarize(dipole(1.0)).level, VerdictLevel::Inconclusive);
  // Two same-sign charges close together: every segment is same-sign.
  EXPECT_EQ(summarize(dipole(0.1, 1.0, 1.0)).level, VerdictLevel::SegmentClassical);
  // One uncertified mixed pair keeps the summary inconclusive.
  const ChargeConfig c(3, {PointCharge{{0, 0, 0}, 1.0}, PointCharge{{0.5, 0, 0}, -1.0}, PointCharge{{50, 0, 0}, 1.0}});
  EXPECT_EQ(summarize(c).level, VerdictLevel::Inconclusive);
}

TEST(Certificates, GuardBandIsConservative) {
  const double lhs = check_global(dipole(10.0)).lhs;
  EXPECT_EQ(check_global(dipole(lhs)).level, VerdictLevel::Inconclusive);
  EXPECT_EQ(check_global(dipole(lhs * (1 + 1e-13))).level, VerdictLevel::Inconclusive);
  EXPECT_EQ(check_global(dipole(lhs * (1 + 1e-11))).level, VerdictLevel::GlobalClassical);
}

TEST(CertificateProperties, ScaleCovariance) {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> lambda(1.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_config(rng, 2 + trial % 5, 3 + trial % 3);
    const double l = lambda(rng);
    std::vector<PointCharge> scaled(c.charges().begin(), c.charges().end());
    for (auto& q : scaled) for (double& x : q.position) x *= l;
    const ChargeConfig s(c.dim(), scaled);
    const auto v = check_global(c);
    const auto w = check_global(s);
    EXPECT_NEAR(w.lhs, v.lhs, 1e-14 * v.lhs);
    EXPECT_NEAR(w.rhs, l * v.rhs, 1e-12 * l * v.rhs);
    if (v.level == VerdictLevel::GlobalClassical) {
      EXPECT_EQ(w.level, VerdictLevel::GlobalClassical);
    }
  }
}

TEST(CertificateProperties, ShrinkingChargesPreservesCertificate) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> shrink(0.01, 1.0);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_config(rng, 2 + trial % 3, 3);
    if (check_global(c).level != VerdictLevel::GlobalClassical) continue;
    ++certified;
    std::vector<PointCharge> smaller(c.charges().begin(), c.charges().end());
    smaller[trial % smaller.size()].strength *= shrink(rng);
    EXPECT_EQ(check_global(ChargeConfig(3, smaller)).level, VerdictLevel::GlobalClassical);
  }
  EXPECT_GT(certified, 10);
}

TEST(CertificateProperties, InconclusiveIsOneSided) {
  // INCONCLUSIVE carries no claim: a configuration inconclusive under the
  // global rule may still be certified by a sharper one.
  const auto c = dipole(1.2);
  EXPECT_EQ(check_global(c).level, VerdictLevel::Inconclusive);
  EXPECT_EQ(check_two_charge(c).level, VerdictLevel::TwoChargeClassical);
}
