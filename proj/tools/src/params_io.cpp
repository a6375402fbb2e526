#include "ltmv_cli/params_io.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "ltmv_cli/format.hpp"

namespace ltmv::cli {

namespace {

struct Field {
    const char* name;
    double ParamValues::*member;
};

constexpr std::array<Field, 10> kFields{{
    {"kappa", &ParamValues::kappa},
    {"rbar", &ParamValues::rbar},
    {"sigma_r", &ParamValues::sigma_r},
    {"a", &ParamValues::a},
    {"b", &ParamValues::b},
    {"alpha", &ParamValues::alpha},
    {"xbar", &ParamValues::xbar},
    {"sigma_x", &ParamValues::sigma_x},
    {"sigma_S", &ParamValues::sigma_S},
    {"rho", &ParamValues::rho},
}};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string env_name(const char* key) {
    std::string name = "LTMV_";
    for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    return name;
}

}  // namespace

ParamValues parse_params_text(const std::string& text, const std::string& origin) {
    std::map<std::string, double> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        bool known = false;
        for (const auto& f : kFields) known = known || key == f.name;
        if (!known) throw ConfigError(where + ": unknown parameter '" + key + "'");
        if (seen.count(key)) throw ConfigError(where + ": duplicate parameter '" + key + "'");
        seen[key] = parse_number(value, where);
    }
    ParamValues v;
    for (const auto& f : kFields) {
        if (const char* env = std::getenv(env_name(f.name).c_str())) {
            seen[f.name] = parse_number(env, env_name(f.name));
        }
        const auto it = seen.find(f.name);
        if (it == seen.end()) throw ConfigError(origin + ": missing parameter '" + f.name + "'");
        v.*(f.member) = it->second;
    }
    return v;
}

ParamValues read_params_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open parameter file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_params_text(buf.str(), path.string());
}

std::string params_to_text(const ParamValues& v) {
    std::string out;
    for (const auto& f : kFields) out += std::string(f.name) + " = " + format_number(v.*(f.member)) + "\n";
    return out;
}

}  // namespace ltmv::cli
