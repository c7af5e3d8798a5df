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

// Command-line front end: smooth, states, imu, compare, bench.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trajsynth/trajsynth.hpp"

namespace ts = trajsynth;

namespace {

enum Exit : int { kOk = 0, kInvalid = 2, kSpacing = 3, kIo = 4 };

struct Options {
    std::string waypoints;
    std::string config;
    std::string method;
    std::optional<double> dt;
    double ds = 1.0;
    std::string out = "-";
    std::string format = "csv";
    std::string generator = "asg";
    std::size_t repetitions = 200;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<ts::Point2> load_waypoints(const Options& o) {
    const auto fmt = ends_with(o.waypoints, ".json") ? ts::WaypointFormat::Json : ts::WaypointFormat::Csv;
    return ts::parse_waypoints(ts::io::read_file(o.waypoints), fmt);
}

ts::ScenarioConfig load_config(const Options& o) {
    ts::ScenarioConfig cfg;
    if (!o.config.empty()) {
        cfg = ts::parse_config(ts::io::read_file(o.config));
    }
    if (!o.method.empty()) {
        cfg.method = *ts::parse_fillet_method(o.method);
    }
    if (o.dt) {
        cfg.dt = *o.dt;
    }
    cfg.validate();
    return cfg;
}

ts::io::Format output_format(const Options& o) {
    return o.format == "json" ? ts::io::Format::Json : ts::io::Format::Csv;
}

int run(const std::string& command, const Options& o) {
    const auto waypoints = load_waypoints(o);
    const ts::ScenarioConfig cfg = load_config(o);
    const auto fmt = output_format(o);

    if (command == "smooth") {
        const ts::SmoothPath path = ts::smooth_path(waypoints, cfg.fillet());
        ts::io::emit(o.out, std::cout, [&](std::ostream& os) { ts::io::write_path(os, path, o.ds, fmt); });
    } else if (command == "states") {
        const ts::SmoothPath path = ts::smooth_path(waypoints, cfg.fillet());
        const auto states = ts::sample_states(path, cfg.speed(), cfg.dt, cfg.origin(), cfg.g);
        ts::io::emit(o.out, std::cout, [&](std::ostream& os) { ts::io::write_states(os, states, fmt); });
    } else if (command == "imu") {
        const ts::SmoothPath path = ts::smooth_path(waypoints, cfg.fillet());
        const auto gen = o.generator == "rii" ? ts::Generator::Rii : ts::Generator::Asg;
        const auto imu = ts::generate_imu(path, cfg, gen, cfg.dt);
        ts::io::emit(o.out, std::cout, [&](std::ostream& os) { ts::io::write_imu(os, imu, fmt); });
    } else if (command == "compare") {
        const auto rows = ts::run_compare(waypoints, cfg);
        ts::io::emit(o.out, std::cout, [&](std::ostream& os) { ts::io::write_comparison(os, rows, fmt); });
    } else if (command == "bench") {
        const auto rows = ts::run_bench(waypoints, cfg, o.repetitions);
        ts::io::emit(o.out, std::cout, [&](std::ostream& os) { ts::io::write_bench(os, rows, fmt); });
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-curvature path smoothing and IMU signal synthesis"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> methods{"arc", "clothoid", "fermat"};
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--waypoints", o.waypoints, "Waypoint file (.csv rows x,y or .json [[x,y],...])")
            ->required();
        sub->add_option("--config", o.config, "JSON scenario config");
        sub->add_option("--method", o.method, "Fillet method (overrides config)")
            ->check(CLI::IsMember(methods));
        sub->add_option("--out", o.out, "Output file, '-' for stdout");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* smooth = app.add_subcommand("smooth", "Smooth waypoints and sample the path");
    common(smooth);
    smooth->add_option("--ds", o.ds, "Path sample spacing in metres")->check(CLI::PositiveNumber);

    auto* states = app.add_subcommand("states", "Aircraft states along the smoothed path");
    common(states);
    states->add_option("--dt", o.dt, "Sample period in seconds (overrides config)");

    auto* imu = app.add_subcommand("imu", "Synthesised IMU signals");
    common(imu);
    imu->add_option("--dt", o.dt, "Sample period in seconds (overrides config)");
    imu->add_option("--generator", o.generator, "asg (analytic) or rii (finite difference)")
        ->check(CLI::IsMember({"asg", "rii"}));

    auto* compare = app.add_subcommand("compare", "Error versus sample period sweep");
    common(compare);

    auto* bench = app.add_subcommand("bench", "Median smoothing runtime per method");
    common(bench);
    bench->add_option("--repetitions", o.repetitions, "Timed repetitions per method")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, o);
    } catch (const ts::Error& e) {
        std::cerr << "error: " << ts::to_string(e.code()) << ": " << e.what() << '\n';
        switch (e.code()) {
        case ts::ErrorCode::InsufficientWaypointSpacing:
            if (e.index()) {
                std::cerr << "waypoint index: " << *e.index() << '\n';
            }
            return kSpacing;
        case ts::ErrorCode::IoError: return kIo;
        default: return kInvalid;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
}
