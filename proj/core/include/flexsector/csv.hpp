// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace flexsector {

/// Locale-independent numeric cell: 12 significant digits, '.' decimal
/// point, no grouping; reruns produce byte-identical files.
inline std::string csv_number(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

inline std::string csv_number(std::int64_t v) { return std::to_string(v); }
inline std::string csv_number(int v) { return std::to_string(v); }

/// Minimal CSV emitter with a fixed column count per file.
class CsvWriter {
public:
    CsvWriter(const std::string& path, std::initializer_list<const char*> header)
        : out_(path, std::ios::binary), columns_(header.size()) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
        bool first = true;
        for (const char* h : header) {
            if (!first) out_ << ',';
            out_ << h;
            first = false;
        }
        out_ << '\n';
    }

    void row(const std::vector<std::string>& cells) {
        if (cells.size() != columns_) {
            throw std::logic_error("csv row width does not match header");
        }
        bool first = true;
        for (const std::string& c : cells) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
    std::size_t columns_;
};

}  // namespace flexsector
