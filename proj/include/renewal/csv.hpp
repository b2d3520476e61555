#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "renewal/process.hpp"

namespace renewal {

// Shortest round-trip decimal form; locale-independent and byte-stable, so
// identical runs produce identical files.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("csv: cannot open " + path);
    }

    void header(const std::vector<std::string>& names) { line(names); }

    template <class... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        (append_cell(cells, first), ...);
        out_ << '\n';
    }

private:
    void line(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    template <class T>
    void append_cell(const T& v, bool& first) {
        if (!first) out_ << ',';
        first = false;
        if constexpr (std::is_same_v<T, double> || std::is_same_v<T, float>) {
            out_ << format_double(v);
        } else {
            out_ << v;
        }
    }

    std::ofstream out_;
};

inline void write_realization_csv(const std::string& path, const Realization& r) {
    CsvWriter csv(path);
    csv.header({"index", "event_time", "inter_arrival"});
    for (std::size_t i = 0; i < r.event_times.size(); ++i) {
        csv.row(i + 1, r.event_times[i], r.inter_arrivals[i]);
    }
}

}  // namespace renewal
