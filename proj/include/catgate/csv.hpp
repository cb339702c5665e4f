#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace catgate {

/// Numeric table with a header row. Numbers are written in shortest
/// round-trip form, so reading a file back gives bit-identical doubles.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;
    std::vector<double> values(const std::string& name) const;
};

std::string format_number(double v);
void write_csv(const std::filesystem::path& path, const Table& table);
Table read_csv(const std::filesystem::path& path);

}  // namespace catgate
