#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace cccmap::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// %.17g formatting; round-trips every finite double.
std::string format_number(double v);

/// JSON with every floating-point number written to 17 significant digits.
void write_json(std::ostream& out, const Json& value);

/// Indented "key: value" rendering for people.
void write_text(std::ostream& out, const Json& value);

/// Comma-separated table with a header row and LF line endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace cccmap::cli
