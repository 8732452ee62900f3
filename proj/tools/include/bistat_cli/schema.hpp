#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bistat::cli {

using nlohmann::json;

/// Names of the embedded schemas: "run_config", "constants_report",
/// "check_report", "radial_report", "solve_report".
const json& schema(std::string_view name);
std::vector<std::string> schema_names();

/// Validates against the subset of JSON Schema the bundled schemas use:
/// type, enum, minimum, exclusiveMinimum, maximum, minItems, maxItems, items,
/// required, properties, additionalProperties (false only), and "$ref" of the
/// form "#/definitions/<name>". Returns one "path: message" string per
/// violation; empty means valid.
std::vector<std::string> validate(const json& value, const json& schema);

}  // namespace bistat::cli
