#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace ltmv::cli {

using Json = nlohmann::ordered_json;

/// Plain decimal with 12 significant digits; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

/// Strict decimal parse of a whole field; throws ConfigError on junk.
double parse_number(std::string_view text, std::string_view what);

/// Pretty JSON whose floating-point values use format_number. NaN becomes null and
/// infinities become the strings "inf"/"-inf".
std::string to_json_text(const Json& j);

}  // namespace ltmv::cli
