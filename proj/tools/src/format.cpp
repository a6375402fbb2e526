#include "ltmv_cli/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ltmv_cli/params_io.hpp"

namespace ltmv::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
    const int decimals = exponent >= 11 ? 0 : 11 - exponent;
    char out[400];
    std::snprintf(out, sizeof out, "%.*f", decimals, v);
    return out;
}

double parse_number(std::string_view text, std::string_view what) {
    if (text == "inf" || text == "+inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ConfigError(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
    }
    return v;
}

namespace {

void write(const Json& j, std::string& out, int level) {
    const std::string pad(static_cast<std::size_t>(2 * level), ' ');
    const std::string inner(static_cast<std::size_t>(2 * (level + 1)), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += inner + Json(it.key()).dump() + ": ";
            write(it.value(), out, level + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ",\n";
            first = false;
            out += inner;
            write(v, out, level + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        if (std::isnan(v)) {
            out += "null";
        } else if (std::isinf(v)) {
            out += v > 0 ? "\"inf\"" : "\"-inf\"";
        } else {
            out += format_number(v);
        }
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

}  // namespace

std::string to_json_text(const Json& j) {
    std::string out;
    write(j, out, 0);
    out += "\n";
    return out;
}

}  // namespace ltmv::cli
