#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bistat/charges.hpp"

namespace bistat {

enum class VerdictLevel {
  GlobalClassical,
  SegmentClassical,
  TwoChargeClassical,
  SameSignSegment,
  Inconclusive,
};

std::string_view to_string(VerdictLevel level);

/// Sub-verdict for the open segment between charges j < l.
struct SegmentVerdict {
  std::size_t j = 0;
  std::size_t l = 0;
  VerdictLevel level = VerdictLevel::Inconclusive;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

/// Outcome of a sufficient condition for classicality off the charges.
/// INCONCLUSIVE only means the rule did not apply; it never asserts that the
/// minimizer fails to be a classical solution.
struct Verdict {
  VerdictLevel level = VerdictLevel::Inconclusive;
  std::string rule;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::vector<SegmentVerdict> per_segment;
};

/// Relative guard band: lhs must beat rhs by more than this fraction.
inline constexpr double kCertificateGuard = 1e-12;

/// (N/omega)^{1/(N-1)} (N-1)/(N-2) [P^{1/(N-1)} + Q^{1/(N-1)}] < min |x_j - x_l|,
/// P, Q the total positive and negative charge.
Verdict check_global(const ChargeConfig& config);

/// C~^{-1/(N-1)} [P^{1/(N-1)} + Q^{1/(N-1)}] against the minimum distance, with
/// the same left-hand side compared against every pair in per_segment.
Verdict check_refined(const ChargeConfig& config, double ctilde);
Verdict check_refined(const ChargeConfig& config);

/// (|a1|^{1/(N-1)} + |a2|^{1/(N-1)}) A(N) < |x1 - x2| for a pair of opposite
/// charges. Throws NotApplicable for other configurations.
Verdict check_two_charge(const ChargeConfig& config);

/// Same-sign pairs are classical unconditionally; mixed pairs go through the
/// per-segment refined rule.
std::vector<SegmentVerdict> classify_segments(const ChargeConfig& config, double ctilde);
std::vector<SegmentVerdict> classify_segments(const ChargeConfig& config);

/// Strongest certificate available: the first of global, refined and
/// two-charge rules that applies; otherwise SEGMENT_CLASSICAL when every
/// segment is certified individually (margin = smallest segment margin);
/// otherwise INCONCLUSIVE. per_segment always carries classify_segments.
Verdict summarize(const ChargeConfig& config);

}  // namespace bistat
