#include "swarmsim/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace swarmsim {

std::uint64_t fnv1a_hash(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : data) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
    nlohmann::json j;
    j["tool"] = m.tool;
    j["version"] = m.version;
    j["command"] = m.command;
    j["config"] = m.config_text;
    j["config_hash"] = m.config_hash;
    j["seeds"] = m.seeds;
    j["artifacts"] = m.artifacts;
    j["wall_seconds"] = m.wall_seconds;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open manifest: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed manifest " + path.string() + ": " + e.what());
    }
    RunManifest m;
    m.tool = j.at("tool").get<std::string>();
    m.version = j.at("version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.config_text = j.at("config").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::uint64_t>();
    m.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    m.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    return m;
}

}  // namespace swarmsim
