#include "bistat/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bistat/constants.hpp"
#include "bistat/errors.hpp"
#include "bistat/profiles.hpp"

namespace bistat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool beats(double lhs, double rhs) { return lhs < rhs * (1.0 - kCertificateGuard); }

double sign_class_bracket(const ChargeConfig& config) {
  const double p = 1.0 / (config.dim() - 1);
  // An empty sign class contributes 0^{1/(N-1)} = 0.
  return std::pow(config.positive_total(), p) + std::pow(config.negative_total(), p);
}

Verdict compare(std::string rule, double lhs, double rhs, VerdictLevel on_success) {
  Verdict v;
  v.rule = std::move(rule);
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = rhs - lhs;
  v.level = beats(lhs, rhs) ? on_success : VerdictLevel::Inconclusive;
  return v;
}

Verdict single_charge(std::string rule) {
  Verdict v;
  v.level = VerdictLevel::GlobalClassical;
  v.rule = std::move(rule);
  v.lhs = 0.0;
  v.rhs = kInf;
  v.margin = kInf;
  return v;
}

}  // namespace

std::string_view to_string(VerdictLevel level) {
  switch (level) {
    case VerdictLevel::GlobalClassical: return "GLOBAL_CLASSICAL";
    case VerdictLevel::SegmentClassical: return "SEGMENT_CLASSICAL";
    case VerdictLevel::TwoChargeClassical: return "TWO_CHARGE_CLASSICAL";
    case VerdictLevel::SameSignSegment: return "SAME_SIGN_SEGMENT";
    case VerdictLevel::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict check_global(const ChargeConfig& config) {
  static constexpr const char* kRule = "global-best-constant";
  if (config.size() < 2) return single_charge(kRule);
  const double n = config.dim();
  const double factor = std::pow(n / sphere_measure(config.dim()), 1.0 / (n - 1.0)) * (n - 1.0) / (n - 2.0);
  return compare(kRule, factor * sign_class_bracket(config), config.min_distance(), VerdictLevel::GlobalClassical);
}

Verdict check_refined(const ChargeConfig& config, double ctilde) {
  static constexpr const char* kRule = "refined-constant";
  if (!(ctilde > 0.0) || !std::isfinite(ctilde)) throw InvalidArgument("check_refined needs a positive C~");
  if (config.size() < 2) return single_charge(kRule);
  const double lhs = std::pow(ctilde, -1.0 / (config.dim() - 1)) * sign_class_bracket(config);
  Verdict v = compare(kRule, lhs, config.min_distance(), VerdictLevel::GlobalClassical);
  for (std::size_t j = 0; j < config.size(); ++j) {
    for (std::size_t l = j + 1; l < config.size(); ++l) {
      const double d = config.distance(j, l);
      v.per_segment.push_back(SegmentVerdict{j, l, beats(lhs, d) ? VerdictLevel::SegmentClassical : VerdictLevel::Inconclusive,
                                             lhs, d, d - lhs});
    }
  }
  return v;
}

Verdict check_refined(const ChargeConfig& config) {
  return check_refined(config, refined_constant_ctilde(config.dim()));
}

Verdict check_two_charge(const ChargeConfig& config) {
  if (config.size() != 2) throw NotApplicable("two-charge rule needs exactly two charges");
  const double a1 = config[0].strength;
  const double a2 = config[1].strength;
  if (a1 * a2 > 0.0) throw NotApplicable("two-charge rule needs charges of opposite sign; use the same-sign rule");
  const double p = 1.0 / (config.dim() - 1);
  const double lhs = (std::pow(std::abs(a1), p) + std::pow(std::abs(a2), p)) * shape_constant_A(config.dim());
  return compare("two-charge-radial", lhs, config.distance(0, 1), VerdictLevel::TwoChargeClassical);
}

std::vector<SegmentVerdict> classify_segments(const ChargeConfig& config, double ctilde) {
  std::vector<SegmentVerdict> out;
  if (config.size() < 2) return out;
  const Verdict refined = check_refined(config, ctilde);
  for (const SegmentVerdict& seg : refined.per_segment) {
    if (config[seg.j].strength * config[seg.l].strength > 0.0) {
      out.push_back(SegmentVerdict{seg.j, seg.l, VerdictLevel::SameSignSegment, 0.0, seg.rhs, kInf});
    } else {
      out.push_back(seg);
    }
  }
  return out;
}

std::vector<SegmentVerdict> classify_segments(const ChargeConfig& config) {
  return classify_segments(config, refined_constant_ctilde(config.dim()));
}

Verdict summarize(const ChargeConfig& config) {
  const double ctilde = refined_constant_ctilde(config.dim());
  std::vector<SegmentVerdict> segments = classify_segments(config, ctilde);

  Verdict best = check_global(config);
  if (best.level == VerdictLevel::Inconclusive) {
    Verdict refined = check_refined(config, ctilde);
    if (refined.level != VerdictLevel::Inconclusive) best = std::move(refined);
  }
  if (best.level == VerdictLevel::Inconclusive && config.size() == 2 && config[0].strength * config[1].strength < 0.0) {
    Verdict pair = check_two_charge(config);
    if (pair.level != VerdictLevel::Inconclusive) best = std::move(pair);
  }
  if (best.level == VerdictLevel::Inconclusive && !segments.empty()) {
    const bool all_certified = std::all_of(segments.begin(), segments.end(), [](const SegmentVerdict& s) {
      return s.level != VerdictLevel::Inconclusive;
    });
    if (all_certified) {
      const auto weakest = std::min_element(segments.begin(), segments.end(),
                                            [](const SegmentVerdict& x, const SegmentVerdict& y) { return x.margin < y.margin; });
      best = Verdict{VerdictLevel::SegmentClassical, "per-segment", weakest->lhs, weakest->rhs, weakest->margin, {}};
    }
  }
  best.per_segment = std::move(segments);
  return best;
}

}  // namespace bistat
