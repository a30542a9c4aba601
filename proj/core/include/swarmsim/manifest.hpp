#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace swarmsim {

/// Provenance record written once per CLI invocation: the exact config, the
/// seeds that were used, and the artifacts the command produced (paths
/// relative to the manifest's directory).
struct RunManifest {
    std::string tool = "swarmsim";
    std::string version;
    std::string command;
    std::string config_text;
    std::uint64_t config_hash = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> artifacts;
    double wall_seconds = 0.0;
};

std::uint64_t fnv1a_hash(std::string_view data);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Throws std::runtime_error on a missing or malformed file.
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace swarmsim
