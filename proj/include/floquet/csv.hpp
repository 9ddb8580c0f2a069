#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace floquet {

// All floating-point output carries 17 significant digits so files
// round-trip losslessly.
inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> footers;  // emitted as "# <line>"

    void add_row(std::vector<double> row) {
        if (row.size() != header.size())
            throw std::invalid_argument("CsvTable: row width does not match header");
        rows.push_back(std::move(row));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            out += header[i];
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += format_value(row[i]);
            }
            out += '\n';
        }
        for (const auto& f : footers) out += "# " + f + '\n';
        return out;
    }

    void write_file(const std::string& path) const {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("CsvTable: cannot open " + path);
        os << to_string();
        if (!os) throw std::runtime_error("CsvTable: write failed for " + path);
    }
};

}  // namespace floquet
