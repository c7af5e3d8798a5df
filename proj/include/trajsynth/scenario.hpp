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

#ifndef TRAJSYNTH_SCENARIO_HPP
#define TRAJSYNTH_SCENARIO_HPP

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trajsynth/error.hpp"
#include "trajsynth/imu.hpp"
#include "trajsynth/kinematics.hpp"
#include "trajsynth/smoothing.hpp"

namespace trajsynth {

struct ScenarioConfig {
    FilletMethod method = FilletMethod::Clothoid;
    double k_max = 0.005;
    double k_prime_max = 0.00005;
    double v_a = 30.0;
    double g = standard_gravity;
    double altitude = 0.0;
    double dt = 0.1;
    std::vector<double> dt_grid{0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    double baseline_dt = 0.001;

    FilletConfig fillet(FilletMethod m) const { return FilletConfig{m, k_max, k_prime_max}; }
    FilletConfig fillet() const { return fillet(method); }
    SpeedProfile speed() const { return SpeedProfile::constant(v_a); }
    GravityModel gravity() const { return GravityModel{g}; }
    NedOrigin origin() const { return NedOrigin{0.0, 0.0, -altitude}; }

    void validate() const {
        fillet().validate();
        gravity().validate();
        const auto positive = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw Error(ErrorCode::InvalidConfig, std::string(name) + " must be positive");
            }
        };
        positive(v_a, "v_a");
        positive(dt, "dt");
        positive(baseline_dt, "baseline_dt");
        if (!std::isfinite(altitude)) {
            throw Error(ErrorCode::InvalidConfig, "altitude must be finite");
        }
        if (dt_grid.empty()) {
            throw Error(ErrorCode::InvalidConfig, "dt_grid must not be empty");
        }
        for (double v : dt_grid) {
            positive(v, "dt_grid entry");
            if (!(v > baseline_dt)) {
                throw Error(ErrorCode::InvalidConfig, "dt_grid entries must exceed baseline_dt");
            }
        }
    }
};

/// Parses a JSON config object. Missing keys keep their defaults; unknown
/// keys are rejected.
inline ScenarioConfig parse_config(std::string_view text, ScenarioConfig cfg = {}) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    }
    const auto number = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_number()) {
            throw Error(ErrorCode::InvalidConfig, "config key '" + key + "' must be a number");
        }
        return v.get<double>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "method") {
            if (!value.is_string()) {
                throw Error(ErrorCode::InvalidConfig, "config key 'method' must be a string");
            }
            const auto m = parse_fillet_method(value.get<std::string>());
            if (!m) {
                throw Error(ErrorCode::InvalidConfig, "unknown method '" + value.get<std::string>() + "'");
            }
            cfg.method = *m;
        } else if (key == "k_max") {
            cfg.k_max = number(value, key);
        } else if (key == "k_prime_max") {
            cfg.k_prime_max = number(value, key);
        } else if (key == "v_a") {
            cfg.v_a = number(value, key);
        } else if (key == "g") {
            cfg.g = number(value, key);
        } else if (key == "altitude") {
            cfg.altitude = number(value, key);
        } else if (key == "dt") {
            cfg.dt = number(value, key);
        } else if (key == "baseline_dt") {
            cfg.baseline_dt = number(value, key);
        } else if (key == "dt_grid") {
            if (!value.is_array()) {
                throw Error(ErrorCode::InvalidConfig, "config key 'dt_grid' must be an array");
            }
            cfg.dt_grid.clear();
            for (const auto& v : value) {
                cfg.dt_grid.push_back(number(v, key));
            }
        } else {
            throw Error(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

enum class WaypointFormat { Csv, Json };

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty() && std::isfinite(out);
}

inline std::vector<Point2> parse_waypoints_csv(std::string_view text) {
    std::vector<Point2> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto comma = line.find(',');
        Point2 p;
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos ||
            !parse_double(line.substr(0, comma), p.x) ||
            !parse_double(line.substr(comma + 1), p.y)) {
            throw Error(ErrorCode::ParseError,
                        "malformed waypoint row at line " + std::to_string(line_no), line_no);
        }
        out.push_back(p);
    }
    return out;
}

inline std::vector<Point2> parse_waypoints_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("waypoints are not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw Error(ErrorCode::ParseError, "waypoint JSON must be an array of [x, y] pairs");
    }
    std::vector<Point2> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
            throw Error(ErrorCode::ParseError, "malformed waypoint at index " + std::to_string(i), i);
        }
        out.push_back(Point2{row[0].get<double>(), row[1].get<double>()});
    }
    return out;
}

} // namespace detail

/// CSV: one "x,y" row per waypoint; blank lines and '#' comments are skipped.
/// JSON: an array of [x, y] pairs.
inline std::vector<Point2> parse_waypoints(std::string_view text, WaypointFormat format) {
    std::vector<Point2> out = format == WaypointFormat::Csv ? detail::parse_waypoints_csv(text)
                                                            : detail::parse_waypoints_json(text);
    if (out.size() < 2) {
        throw Error(ErrorCode::InvalidInput, "at least two waypoints are required");
    }
    return out;
}

struct Upsilon {
    double accel = 0.0; // (m/s^2) * s
    double gyro = 0.0;  // (rad/s) * s
};

/// Integrated error norm of `signal` against a finer `baseline` grid, by the
/// trapezoid rule over the signal timestamps. The first sample is never
/// compared (finite-difference generators duplicate it); the first interval
/// is integrated with the error at the second sample.
inline Upsilon error_metric(std::span<const ImuSample> signal, std::span<const ImuSample> baseline) {
    if (signal.size() < 2 || baseline.size() < 2) {
        throw Error(ErrorCode::InvalidInput, "error metric needs at least two samples");
    }
    const double b0 = baseline.front().t;
    const double bdt = baseline[1].t - baseline[0].t;
    if (!(bdt > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "baseline timestamps must increase");
    }
    std::vector<double> ea(signal.size(), 0.0);
    std::vector<double> eg(signal.size(), 0.0);
    for (std::size_t k = 1; k < signal.size(); ++k) {
        const double t = signal[k].t;
        const double jf = std::round((t - b0) / bdt);
        const auto j = static_cast<std::size_t>(std::max(0.0, jf));
        if (jf < 0.0 || j >= baseline.size() ||
            std::fabs(baseline[j].t - t) > 1e-9 * std::max(1.0, std::fabs(t))) {
            throw Error(ErrorCode::InvalidInput,
                        "signal time " + std::to_string(t) + " is not on the baseline grid", k);
        }
        ea[k] = (signal[k].f_b - baseline[j].f_b).norm();
        eg[k] = (signal[k].w_b - baseline[j].w_b).norm();
    }
    ea[0] = ea[1];
    eg[0] = eg[1];
    Upsilon out;
    for (std::size_t k = 0; k + 1 < signal.size(); ++k) {
        const double h = signal[k + 1].t - signal[k].t;
        out.accel += 0.5 * (ea[k] + ea[k + 1]) * h;
        out.gyro += 0.5 * (eg[k] + eg[k + 1]) * h;
    }
    return out;
}

struct ComparisonRow {
    double dt = 0.0;
    FilletMethod smoother = FilletMethod::Clothoid;
    Generator generator = Generator::Asg;
    double upsilon_accel = 0.0;
    double upsilon_gyro = 0.0;
};

/// IMU signals from the given generator on the grid t_k = k*dt.
inline std::vector<ImuSample> generate_imu(const SmoothPath& path, const ScenarioConfig& cfg,
                                           Generator generator, double dt) {
    if (generator == Generator::Asg) {
        return asg_series(path, cfg.speed(), dt, cfg.gravity());
    }
    const auto states = sample_states(path, cfg.speed(), dt, cfg.origin(), cfg.g);
    return rii_series(states, dt, cfg.gravity());
}

/// Error-versus-sample-period sweep. Baseline: RII at baseline_dt. Rows
/// cover dt_grid x {Clothoid, Fermat} x {ASG, RII}, ordered in that nesting.
inline std::vector<ComparisonRow> run_compare(std::span<const Point2> waypoints,
                                              const ScenarioConfig& cfg) {
    cfg.validate();
    for (double dt : cfg.dt_grid) {
        const double ratio = dt / cfg.baseline_dt;
        if (std::fabs(ratio - std::round(ratio)) > 1e-6 * ratio) {
            throw Error(ErrorCode::InvalidInput,
                        "dt " + std::to_string(dt) + " is not a multiple of baseline_dt");
        }
    }
    constexpr FilletMethod smoothers[] = {FilletMethod::Clothoid, FilletMethod::Fermat};
    std::vector<SmoothPath> paths;
    std::vector<std::vector<ImuSample>> baselines;
    for (FilletMethod m : smoothers) {
        paths.push_back(smooth_path(waypoints, cfg.fillet(m)));
        baselines.push_back(generate_imu(paths.back(), cfg, Generator::Rii, cfg.baseline_dt));
    }
    std::vector<ComparisonRow> rows;
    for (double dt : cfg.dt_grid) {
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (Generator gen : {Generator::Asg, Generator::Rii}) {
                const auto signal = generate_imu(paths[i], cfg, gen, dt);
                const Upsilon u = error_metric(signal, baselines[i]);
                rows.push_back(ComparisonRow{dt, smoothers[i], gen, u.accel, u.gyro});
            }
        }
    }
    return rows;
}

struct BenchRow {
    FilletMethod method = FilletMethod::Arc;
    double median_s = 0.0;
    std::size_t repetitions = 0;
    double speedup_vs_clothoid_pct = 0.0;
};

/// Median wall-clock time of smooth_path per method. Repetitions are
/// interleaved across methods so drift affects all of them alike.
inline std::vector<BenchRow> run_bench(std::span<const Point2> waypoints, const ScenarioConfig& cfg,
                                       std::size_t repetitions = 200) {
    cfg.validate();
    if (repetitions == 0) {
        throw Error(ErrorCode::InvalidConfig, "repetitions must be positive");
    }
    constexpr FilletMethod methods[] = {FilletMethod::Arc, FilletMethod::Fermat,
                                        FilletMethod::Clothoid};
    std::vector<std::vector<double>> times(3);
    volatile double sink = 0.0;
    for (FilletMethod m : methods) {
        sink = sink + smooth_path(waypoints, cfg.fillet(m)).total_length();
    }
    for (std::size_t r = 0; r < repetitions; ++r) {
        for (std::size_t i = 0; i < 3; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            const SmoothPath path = smooth_path(waypoints, cfg.fillet(methods[i]));
            const auto t1 = std::chrono::steady_clock::now();
            sink = sink + path.total_length();
            times[i].push_back(std::chrono::duration<double>(t1 - t0).count());
        }
    }
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        auto& v = times[i];
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        double median = v[v.size() / 2];
        if (v.size() % 2 == 0) {
            median = 0.5 * (median + *std::max_element(v.begin(), v.begin() + v.size() / 2));
        }
        rows.push_back(BenchRow{methods[i], median, repetitions, 0.0});
    }
    const double clothoid = rows[2].median_s;
    for (BenchRow& row : rows) {
        row.speedup_vs_clothoid_pct = clothoid > 0.0 ? 100.0 * (1.0 - row.median_s / clothoid) : 0.0;
    }
    return rows;
}

} // namespace trajsynth

#endif // TRAJSYNTH_SCENARIO_HPP
