#include "swarmsim/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace swarmsim {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary), columns_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path.string());
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_) {
        throw std::runtime_error("csv row width mismatch in " + path_.string());
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::flush() { out_.flush(); }

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::runtime_error("csv column not found: " + name);
}

double CsvTable::real(std::size_t row, std::size_t col) const {
    return std::stod(rows.at(row).at(col));
}

long long CsvTable::integer(std::size_t row, std::size_t col) const {
    return std::stoll(rows.at(row).at(col));
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open csv: " + path.string());

    const auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream stream(line);
        while (std::getline(stream, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        return fields;
    };

    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    table.header = split(line);

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != table.header.size()) {
            throw std::runtime_error("csv row width mismatch in " + path.string());
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

}  // namespace swarmsim
