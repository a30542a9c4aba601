#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "swarmsim/evolution.hpp"

namespace swarmsim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the key-value scenario schema (see README for the full key list).
/// Lines are `key = value`, `#` starts a comment, unspecified keys keep the
/// reference defaults. Throws ConfigError with source/line context for
/// unknown keys and malformed lines, and with field context for out-of-range
/// values.
DEConfig parse_config(std::string_view text, std::string_view source_name = "<config>");

/// Reads and parses a config file. Throws ConfigError (missing file included).
DEConfig load_config_file(const std::string& path);

/// Writes every key explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const DEConfig& cfg);

bool operator==(const Space& a, const Space& b);
bool operator==(const Obstacle& a, const Obstacle& b);
bool operator==(const GroundParams& a, const GroundParams& b);
bool operator==(const AirParams& a, const AirParams& b);
bool operator==(const SimConfig& a, const SimConfig& b);
bool operator==(const GeneSpec& a, const GeneSpec& b);
bool operator==(const DEConfig& a, const DEConfig& b);

}  // namespace swarmsim
