#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pivot_buffon::cli {

using Document = nlohmann::ordered_json;

/// Formats a double with 17 significant digits; non-finite values become
/// "null" in JSON and "inf", "-inf" or "nan" in CSV.
std::string format_number(double value, bool json);

/// One JSON document, two-space indent, floats at 17 significant digits.
std::string render_json(const Document& doc);

/// Nested objects are flattened into dotted column names. Each element of
/// `rows` must be an object with the same keys; a header row comes first.
std::string render_csv(const std::vector<Document>& rows);

}  // namespace pivot_buffon::cli
