// Copyright 2026 The trajsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRAJSYNTH_IO_HPP
#define TRAJSYNTH_IO_HPP

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trajsynth/error.hpp"
#include "trajsynth/imu.hpp"
#include "trajsynth/kinematics.hpp"
#include "trajsynth/scenario.hpp"
#include "trajsynth/smoothing.hpp"

namespace trajsynth::io {

enum class Format { Csv, Json };

/// 12 significant digits, shortest form.
inline std::string number(double v) {
    if (v == 0.0) {
        return "0"; // folds -0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// A cell is either numeric or a bare string; JSON quotes the strings.
struct Cell {
    std::string text;
    bool quoted = false;
};

inline Cell num(double v) { return Cell{number(v), false}; }
inline Cell integer(std::size_t v) { return Cell{std::to_string(v), false}; }
inline Cell str(std::string s) { return Cell{std::move(s), true}; }

/// Writes a table as CSV (header row then data) or as a JSON array of
/// objects keyed by the column names. Lines end in LF.
class TableWriter {
public:
    TableWriter(std::ostream& os, Format format, std::vector<std::string> columns)
        : os_(os), format_(format), columns_(std::move(columns)) {
        if (format_ == Format::Csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                os_ << (i ? "," : "") << columns_[i];
            }
            os_ << '\n';
        } else {
            os_ << "[";
        }
    }

    TableWriter(const TableWriter&) = delete;
    TableWriter& operator=(const TableWriter&) = delete;

    ~TableWriter() {
        if (format_ == Format::Json) {
            os_ << (rows_ ? "\n]\n" : "]\n");
        }
    }

    void row(const std::vector<Cell>& cells) {
        if (format_ == Format::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os_ << (i ? "," : "") << cells[i].text;
            }
            os_ << '\n';
        } else {
            os_ << (rows_ ? ",\n  {" : "\n  {");
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os_ << (i ? ", " : "") << '"' << columns_[i] << "\": ";
                if (cells[i].quoted) {
                    os_ << '"' << cells[i].text << '"';
                } else {
                    os_ << cells[i].text;
                }
            }
            os_ << "}";
        }
        ++rows_;
    }

private:
    std::ostream& os_;
    Format format_;
    std::vector<std::string> columns_;
    std::size_t rows_ = 0;
};

/// Path sampled every `ds` metres of arc length, plus the final point.
inline void write_path(std::ostream& os, const SmoothPath& path, double ds, Format format) {
    if (!(ds > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "path sample spacing must be positive");
    }
    TableWriter w(os, format, {"s", "x", "y", "psi", "k", "seg_index", "seg_kind"});
    const double total = path.total_length();
    const std::size_t n = sample_count(total, ds);
    const auto emit = [&](double s) {
        const PathSample ps = path.sample(s);
        w.row({num(s), num(ps.point.pos.x), num(ps.point.pos.y), num(ps.point.pos.psi),
               num(ps.point.k), integer(ps.index),
               str(to_string(path.segments()[ps.index].kind()))});
    };
    for (std::size_t i = 0; i < n; ++i) {
        emit(static_cast<double>(i) * ds);
    }
    if (static_cast<double>(n - 1) * ds < total) {
        emit(total);
    }
}

inline void write_states(std::ostream& os, std::span<const AircraftState> states, Format format) {
    TableWriter w(os, format, {"t", "north", "east", "down", "vn", "ve", "vd", "phi", "theta", "psi"});
    for (const AircraftState& s : states) {
        w.row({num(s.t), num(s.pos_n.x()), num(s.pos_n.y()), num(s.pos_n.z()), num(s.vel_n.x()),
               num(s.vel_n.y()), num(s.vel_n.z()), num(s.euler.x()), num(s.euler.y()),
               num(s.euler.z())});
    }
}

inline void write_imu(std::ostream& os, std::span<const ImuSample> samples, Format format) {
    TableWriter w(os, format, {"t", "fx", "fy", "fz", "wx", "wy", "wz"});
    for (const ImuSample& s : samples) {
        w.row({num(s.t), num(s.f_b.x()), num(s.f_b.y()), num(s.f_b.z()), num(s.w_b.x()),
               num(s.w_b.y()), num(s.w_b.z())});
    }
}

inline void write_comparison(std::ostream& os, std::span<const ComparisonRow> rows, Format format) {
    TableWriter w(os, format, {"dt", "smoother", "generator", "upsilon_accel", "upsilon_gyro"});
    for (const ComparisonRow& r : rows) {
        w.row({num(r.dt), str(to_string(r.smoother)), str(to_string(r.generator)),
               num(r.upsilon_accel), num(r.upsilon_gyro)});
    }
}

inline void write_bench(std::ostream& os, std::span<const BenchRow> rows, Format format) {
    TableWriter w(os, format, {"method", "median_s", "repetitions", "speedup_vs_clothoid_pct"});
    for (const BenchRow& r : rows) {
        w.row({str(to_string(r.method)), num(r.median_s), integer(r.repetitions),
               num(r.speedup_vs_clothoid_pct)});
    }
}

/// Writes to `path` through `body`; "-" means stdout.
inline void emit(const std::string& path, std::ostream& stdout_stream,
                 const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(stdout_stream);
        stdout_stream.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    }
    body(out);
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace trajsynth::io

#endif // TRAJSYNTH_IO_HPP
