#pragma once

#include <json.hpp>

#include <string>

namespace hopfkit::cli {

using Doc = nlohmann::ordered_json;

/// Indented "key: value" text; scalar arrays stay on one line and arrays of
/// objects become "-" items.
std::string render_text(const Doc& doc);
std::string render(const Doc& doc, bool json);

}  // namespace hopfkit::cli
