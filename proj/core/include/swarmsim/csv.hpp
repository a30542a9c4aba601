#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace swarmsim {

/// 17 significant digits: enough for a bit-faithful double round-trip.
std::string format_real(double v);

/// Comma-separated, one header row, LF line endings.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& fields);
    void flush();
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws std::runtime_error when absent.
    std::size_t column(const std::string& name) const;
    double real(std::size_t row, std::size_t col) const;
    long long integer(std::size_t row, std::size_t col) const;
};

/// Reads a CSV written by CsvWriter. Throws std::runtime_error on a missing
/// file, an empty file, or rows whose width differs from the header.
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace swarmsim
