#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "halin/generators.hpp"
#include "halin/graph_core.hpp"
#include "halin/halin_ola.hpp"
#include "halin/layout_ops.hpp"
#include "halin/property_suite.hpp"

namespace halin {

inline constexpr int kSchemaVersion = 1;

struct Instance {
  HalinGraph graph;
  std::optional<std::string> name;
  std::optional<GenSpec> gen_spec;
  /// Unknown fields skipped in lax mode.
  std::vector<std::string> warnings;
};

/// Instance file:
///   {"schemaVersion": 1,
///    "tree": {"n": N, "root": R, "children": {"v": [c1, c2, ...], ...}},
///    "cycleOrder": [...],                       // informational, recomputed
///    "metadata": {"name": ..., "genSpec": {...}}}  // optional
/// Unknown fields are errors unless `lax`. Throws ParseError,
/// SchemaVersionUnsupported, InvalidSubstrate and tree construction errors.
Instance parse_instance(std::string_view text, bool lax = false);
std::string serialize_instance(const Instance& instance);
std::string serialize_instance(const HalinGraph& h);

/// Layout file: {"schemaVersion": 1, "vertexAt": [v1, v2, ...]}, position 1
/// first. Throws ParseError, SchemaVersionUnsupported, InvalidLayout.
Layout parse_layout(std::string_view text);
std::string serialize_layout(const Layout& layout);

/// Tree edges dashed, cycle edges bold; with a layout, nodes read "id:pos".
std::string export_dot(const HalinGraph& h, const std::optional<Layout>& layout = std::nullopt);

nlohmann::json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SwapTrace& trace);
nlohmann::json to_json(const OlaCertificate& cert);
nlohmann::json to_json(const SuiteReport& report);

std::string read_file(const std::string& path);  // throws IoError
void write_file(const std::string& path, std::string_view content);

}  // namespace halin
