#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ltmv/capmkt.hpp"

namespace ltmv::cli {

/// Bad configuration: unreadable or malformed files, unknown keys, bad values.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a flat key=value file holding the ten market parameters. Blank lines
/// and '#' comments are ignored. Every key must appear exactly once. A value can
/// be overridden by the environment variable LTMV_<KEY> (upper case).
ParamValues read_params_file(const std::filesystem::path& path);

ParamValues parse_params_text(const std::string& text, const std::string& origin);

std::string params_to_text(const ParamValues& v);

}  // namespace ltmv::cli
