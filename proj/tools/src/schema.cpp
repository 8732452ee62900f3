#include "bistat_cli/schema.hpp"

#include <map>
#include <stdexcept>

#include "schemas_embedded.hpp"

namespace bistat::cli {
namespace {

bool has_type(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  throw std::logic_error("schema uses unknown type " + type);
}

std::string join_path(const std::string& base, const std::string& key) { return base + "/" + key; }

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void check(const json& value, const json& schema, const std::string& path) {
    if (auto it = schema.find("type"); it != schema.end()) {
      bool ok = false;
      if (it->is_string()) {
        ok = has_type(value, it->get<std::string>());
      } else {
        for (const auto& t : *it) ok = ok || has_type(value, t.get<std::string>());
      }
      if (!ok) {
        fail(path, "expected type " + it->dump() + ", got " + std::string(value.type_name()));
        return;
      }
      if (value.is_null()) return;
    }
    if (auto it = schema.find("$ref"); it != schema.end()) {
      // Only local references into the root's definitions are supported.
      const std::string ref = it->get<std::string>();
      constexpr std::string_view kPrefix = "#/definitions/";
      if (ref.rfind(kPrefix, 0) != 0) throw std::invalid_argument("unsupported $ref " + ref);
      check(value, root_.at("definitions").at(ref.substr(kPrefix.size())), path);
    }
    if (auto it = schema.find("enum"); it != schema.end()) {
      bool found = false;
      for (const auto& e : *it) found = found || e == value;
      if (!found) fail(path, "value " + value.dump() + " not in " + it->dump());
    }
    if (value.is_number()) {
      const double x = value.get<double>();
      if (auto it = schema.find("minimum"); it != schema.end() && x < it->get<double>()) fail(path, "below minimum " + it->dump());
      if (auto it = schema.find("maximum"); it != schema.end() && x > it->get<double>()) fail(path, "above maximum " + it->dump());
      if (auto it = schema.find("exclusiveMinimum"); it != schema.end() && !(x > it->get<double>())) {
        fail(path, "must exceed " + it->dump());
      }
    }
    if (value.is_array()) {
      if (auto it = schema.find("minItems"); it != schema.end() && value.size() < it->get<std::size_t>()) {
        fail(path, "needs at least " + it->dump() + " items");
      }
      if (auto it = schema.find("maxItems"); it != schema.end() && value.size() > it->get<std::size_t>()) {
        fail(path, "allows at most " + it->dump() + " items");
      }
      if (auto it = schema.find("items"); it != schema.end()) {
        for (std::size_t i = 0; i < value.size(); ++i) check(value[i], *it, join_path(path, std::to_string(i)));
      }
    }
    if (value.is_object()) {
      const json empty = json::object();
      const auto pit = schema.find("properties");
      const json& props = pit != schema.end() ? *pit : empty;
      if (auto it = schema.find("required"); it != schema.end()) {
        for (const auto& key : *it) {
          if (!value.contains(key.get<std::string>())) fail(join_path(path, key.get<std::string>()), "required key is missing");
        }
      }
      const auto ait = schema.find("additionalProperties");
      const bool closed = ait != schema.end() && ait->is_boolean() && !ait->get<bool>();
      for (const auto& [key, child] : value.items()) {
        if (auto p = props.find(key); p != props.end()) {
          check(child, *p, join_path(path, key));
        } else if (closed) {
          fail(join_path(path, key), "unknown key");
        }
      }
    }
  }

  std::vector<std::string> errors;

 private:
  void fail(const std::string& path, const std::string& message) { errors.push_back((path.empty() ? "/" : path) + ": " + message); }

  const json& root_;
};

}  // namespace

const json& schema(std::string_view name) {
  static const std::map<std::string, json, std::less<>> table = [] {
    std::map<std::string, json, std::less<>> t;
    for (const auto& [n, text] : detail::kEmbeddedSchemas) t.emplace(n, json::parse(text));
    return t;
  }();
  const auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("no schema named " + std::string(name));
  return it->second;
}

std::vector<std::string> schema_names() {
  std::vector<std::string> names;
  for (const auto& [n, text] : detail::kEmbeddedSchemas) names.emplace_back(n);
  return names;
}

std::vector<std::string> validate(const json& value, const json& schema) {
  Validator v(schema);
  v.check(value, schema, "");
  return std::move(v.errors);
}

}  // namespace bistat::cli
