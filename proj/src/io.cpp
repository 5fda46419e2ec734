#include "tc/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace tc {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

// Quote a cell only when it needs it; numeric cells pass through untouched.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += csv_cell(t.columns[c]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += csv_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    nlohmann::json j;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : t.meta) meta[k] = v;
    j["metadata"] = meta;
    j["columns"] = t.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (size_t c = 0; c < row.size(); ++c) {
            if (c < t.numeric.size() && t.numeric[c])
                jr.push_back(std::stod(row[c]));
            else
                jr.push_back(row[c]);
        }
        rows.push_back(jr);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

void write_table(const Table& t, const std::string& path, const std::string& format) {
    std::string payload;
    if (format == "csv")
        payload = to_csv(t);
    else if (format == "json")
        payload = to_json(t);
    else
        throw std::invalid_argument("write_table: format must be csv or json");

    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_table: cannot open " + path);
    f << payload;
}

}  // namespace tc
