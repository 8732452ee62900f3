#include "bistat_cli/config.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <bistat/errors.hpp>

#include "bistat_cli/schema.hpp"

namespace bistat::cli {
namespace {

std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::array<double, 3> triple(const json& v) { return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()}; }

}  // namespace

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "invalid configuration" : "invalid configuration: " + diagnostics.front()),
      diagnostics_(std::move(diagnostics)) {}

RunConfig parse_run_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ConfigError({locate(text, at) + ": malformed JSON (" + std::string(e.what()) + ")"});
  }

  std::vector<std::string> errors = validate(doc, schema("run_config"));
  if (!errors.empty()) throw ConfigError(std::move(errors));

  const int dim = doc["dim"].get<int>();
  std::vector<PointCharge> charges;
  for (std::size_t k = 0; k < doc["charges"].size(); ++k) {
    const json& c = doc["charges"][k];
    if (c["pos"].size() != static_cast<std::size_t>(dim)) {
      errors.push_back("/charges/" + std::to_string(k) + "/pos: expected " + std::to_string(dim) + " coordinates");
    }
    charges.push_back(PointCharge{c["pos"].get<std::vector<double>>(), c["a"].get<double>()});
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));

  std::optional<ChargeConfig> config;
  try {
    config.emplace(dim, std::move(charges));
  } catch (const InvalidArgument& e) {
    throw ConfigError({"/charges: " + std::string(e.what())});
  }

  RunConfig run(*config);
  if (doc.contains("box")) {
    const json& b = doc["box"];
    run.box = BoxSpec{Box{triple(b["lo"]), triple(b["hi"])}, b["h"].get<double>()};
  }
  if (doc.contains("order_m")) run.order_m = doc["order_m"].get<int>();
  if (doc.contains("boundary_rule")) {
    run.boundary_rule = doc["boundary_rule"] == "zero" ? BoundaryRule::Zero : BoundaryRule::RadialSuperposition;
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (t.contains("solver")) run.solver_tol = t["solver"].get<double>();
    if (t.contains("quadrature")) run.quadrature_tol = t["quadrature"].get<double>();
    if (t.contains("max_iter")) run.max_iter = t["max_iter"].get<int>();
  }
  if (doc.contains("seed")) run.seed = doc["seed"].get<std::uint64_t>();
  return run;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({path + ": cannot open configuration file"});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_run_config(buffer.str());
  } catch (const ConfigError& e) {
    std::vector<std::string> diags;
    for (const auto& d : e.diagnostics()) diags.push_back(path + ": " + d);
    throw ConfigError(std::move(diags));
  }
}

}  // namespace bistat::cli
