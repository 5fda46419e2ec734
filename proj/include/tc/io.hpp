#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tc {

// Shortest exact decimal form would not be stable across standard libraries;
// a fixed "%.17g" is, and round-trips doubles exactly.
std::string format_g17(double v);

// One emitted artifact: a header of named columns, string cells (numeric
// cells pre-formatted with format_g17), and key/value metadata for the JSON
// wrapper. Output is byte-deterministic for a fixed table.
struct Table {
    std::vector<std::string> columns;
    std::vector<bool> numeric;  // per column; JSON emits these as numbers
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> meta;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Writes to the path, or to stdout when the path is empty.
void write_table(const Table& t, const std::string& path, const std::string& format);

}  // namespace tc
