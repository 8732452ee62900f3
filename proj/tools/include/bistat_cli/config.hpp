#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <bistat/charges.hpp>
#include <bistat/grid.hpp>

namespace bistat::cli {

/// Raised for malformed or schema-violating configuration files. Every entry
/// of `diagnostics` names a line:column (syntax errors) or a JSON pointer
/// (schema and semantic errors).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct BoxSpec {
  Box box;
  double h = 0.0;
};

struct RunConfig {
  explicit RunConfig(ChargeConfig c) : charges(std::move(c)) {}

  ChargeConfig charges;
  std::optional<BoxSpec> box;
  int order_m = 4;
  BoundaryRule boundary_rule = BoundaryRule::RadialSuperposition;
  double solver_tol = 1e-9;
  double quadrature_tol = 1e-10;
  int max_iter = 200;
  std::optional<std::uint64_t> seed;
};

RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::string& path);

}  // namespace bistat::cli
