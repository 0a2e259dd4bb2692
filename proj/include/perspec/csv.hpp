#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace perspec::report {

/// Fixed 9-significant-digit scientific notation; NaN prints as "nan".
/// The formatting is locale-independent and byte-stable across runs.
std::string format_number(double value);

std::string format_count(long long value);

/// Inverse of format_number (accepts anything strtod does).
double parse_number(const std::string& cell);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, header row first, '\n' line endings, no trailing spaces.
std::string to_csv(const Table& table);

Table parse_csv(const std::string& text);

/// Writes through a temp file in the same directory plus a rename, so readers
/// never observe a partial file. Creates parent directories as needed.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace perspec::report
