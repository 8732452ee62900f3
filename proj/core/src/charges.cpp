#include "bistat/charges.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bistat/errors.hpp"

namespace bistat {

ChargeConfig::ChargeConfig(int dim, std::vector<PointCharge> charges)
    : dim_(dim), charges_(std::move(charges)) {
  if (dim_ < 3) throw InvalidArgument("charge configuration needs dim >= 3, got " + std::to_string(dim_));
  if (charges_.empty()) throw InvalidArgument("charge configuration is empty");
  for (std::size_t k = 0; k < charges_.size(); ++k) {
    const auto& q = charges_[k];
    if (!std::isfinite(q.strength) || q.strength == 0.0) {
      throw InvalidArgument("charge " + std::to_string(k) + " has zero or non-finite strength");
    }
    if (q.position.size() != static_cast<std::size_t>(dim_)) {
      throw InvalidArgument("charge " + std::to_string(k) + " position has " +
                            std::to_string(q.position.size()) + " coordinates, expected " +
                            std::to_string(dim_));
    }
    for (double x : q.position) {
      if (!std::isfinite(x)) throw InvalidArgument("charge " + std::to_string(k) + " has a non-finite coordinate");
    }
  }
  for (std::size_t j = 0; j < charges_.size(); ++j) {
    for (std::size_t l = j + 1; l < charges_.size(); ++l) {
      if (distance(j, l) == 0.0) {
        throw InvalidArgument("charges " + std::to_string(j) + " and " + std::to_string(l) + " coincide");
      }
    }
  }
}

double ChargeConfig::distance(std::size_t j, std::size_t l) const {
  const auto& p = charges_.at(j).position;
  const auto& q = charges_.at(l).position;
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double d = p[i] - q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double ChargeConfig::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < charges_.size(); ++j) {
    for (std::size_t l = j + 1; l < charges_.size(); ++l) best = std::min(best, distance(j, l));
  }
  return best;
}

double ChargeConfig::positive_total() const {
  double s = 0.0;
  for (const auto& q : charges_) {
    if (q.strength > 0.0) s += q.strength;
  }
  return s;
}

double ChargeConfig::negative_total() const {
  double s = 0.0;
  for (const auto& q : charges_) {
    if (q.strength < 0.0) s -= q.strength;
  }
  return s;
}

std::vector<std::size_t> ChargeConfig::positive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < charges_.size(); ++k) {
    if (charges_[k].strength > 0.0) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> ChargeConfig::negative_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < charges_.size(); ++k) {
    if (charges_[k].strength < 0.0) out.push_back(k);
  }
  return out;
}

}  // namespace bistat
