// JSON persistence for rings, quadratic spaces, extension problems, and
// inverse problems, plus plain-text rendering of sector tables. Output is
// byte-deterministic: fixed key order, sorted entries, two-space indent.
#pragma once

#include <string>

#include "fuselift/extension.hpp"
#include "fuselift/fusion.hpp"
#include "fuselift/inverse.hpp"
#include "fuselift/quadspace.hpp"

#include "json.hpp"

namespace fuselift {

using Json = nlohmann::ordered_json;

Json ring_to_json(const FusionRing& r);
FusionRing ring_from_json(const Json& j);

Json space_to_json(const QuadraticSpace& v);
QuadraticSpace space_from_json(const Json& j);

Json extension_to_json(const ExtensionProblem& p);
ExtensionProblem extension_from_json(const Json& j);

Json inverse_to_json(const InverseProblem& ip);
InverseProblem inverse_from_json(const Json& j);

enum class FileKind { Ring, Space, Extension, Inverse };
// Decide what a parsed document describes from its top-level keys.
FileKind detect_kind(const Json& j);

Json sector_table_to_json(const ExtensionProblem& p, const SectorTable& t, bool twisted);
std::string sector_table_to_text(const ExtensionProblem& p, const SectorTable& t, bool twisted);

// Canonical serialization: dump with two-space indent and trailing newline.
std::string to_text(const Json& j);
Json parse_json_text(const std::string& text);  // wraps parse errors

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fuselift
