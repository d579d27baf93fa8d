#pragma once

#include <string>

#include <json.hpp>

#include "dgk/bundle.hpp"
#include "dgk/diagonal.hpp"
#include "dgk/double_groupoid.hpp"
#include "dgk/extension.hpp"
#include "dgk/groupoid.hpp"

namespace dgk {

using Json = nlohmann::json;

// Emitters produce canonical JSON: object keys sorted, integers only.
Json to_json(const FiniteGroupoid& g);
Json to_json(const DoubleGroupoid& d);
Json to_json(const AbelianGroupBundle& k);
Json to_json(const ExtensionData& e);
Json to_json(const Diagram& dg);

// Loaders check shape only and throw FormatError naming the offending field.
FiniteGroupoid groupoid_from_json(const Json& j, const std::string& ctx = {});
DoubleGroupoid double_from_json(const Json& j, const std::string& ctx = {});
AbelianGroupBundle bundle_from_json(const Json& j, const std::string& ctx = {});
ExtensionData extension_from_json(const Json& j, const std::string& ctx = {});
Diagram diagram_from_json(const Json& j, const std::string& ctx = {});

/// Compact single-line dump followed by a newline.
std::string emit(const Json& j);
/// Throws FormatError with the parser's line and column.
Json parse_json(const std::string& text, const std::string& ctx = {});
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dgk
