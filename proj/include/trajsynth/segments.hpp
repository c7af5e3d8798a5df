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

#ifndef TRAJSYNTH_SEGMENTS_HPP
#define TRAJSYNTH_SEGMENTS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>

#include "trajsynth/error.hpp"
#include "trajsynth/quadrature.hpp"

namespace trajsynth {

inline constexpr double pi = std::numbers::pi;

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * pi);
    if (w <= -pi) {
        w += 2.0 * pi;
    }
    return w;
}

/// Smallest signed difference a - b, modulo 2*pi.
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

/// Planar pose. `psi` is the course angle from the +x axis, counter-clockwise.
struct Pose2 {
    double x = 0.0;
    double y = 0.0;
    double psi = 0.0;
};

struct Offset2 {
    double x = 0.0;
    double y = 0.0;
};

enum class SegmentKind { Line, Arc, Clothoid, Fermat };

inline const char* to_string(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::Line: return "line";
    case SegmentKind::Arc: return "arc";
    case SegmentKind::Clothoid: return "clothoid";
    case SegmentKind::Fermat: return "fermat";
    }
    return "unknown";
}

struct LineParams {};

struct ArcParams {
    double radius = 1.0;
    int rho = 1; // +1 counter-clockwise (left), -1 clockwise (right)
};

struct ClothoidParams {
    double k0 = 0.0;    // initial curvature, 1/m
    double sigma = 0.0; // curvature rate dk/ds, 1/m^2
};

/// Fermat spiral r = c*sqrt(theta), used on 0 <= theta <= theta_end.
///
/// A forward segment starts at the spiral origin (zero curvature) and ends at
/// polar angle theta_end. A reflected segment runs the same spiral backwards:
/// it starts at polar angle theta_end and finishes at the spiral origin. For
/// reflected segments the owning Segment's `start` pose holds that final
/// anchor (position and course at the spiral origin), not the first point.
struct FermatParams {
    double c = 1.0;
    int rho = 1;
    double theta_end = 0.0;
    bool reflected = false;
};

using SegmentParams = std::variant<LineParams, ArcParams, ClothoidParams, FermatParams>;

struct Segment {
    Pose2 start;
    double length = 0.0;
    SegmentParams params;

    SegmentKind kind() const { return static_cast<SegmentKind>(params.index()); }

    template <class P>
    const P& as() const { return std::get<P>(params); }
};

/// Sample on a segment. `k` is signed (positive for left turns) and
/// `k_prime` is dk/ds along the direction of travel.
struct PathPoint {
    double s = 0.0;
    Pose2 pos;
    double k = 0.0;
    double k_prime = 0.0;
};

namespace detail {

inline void check_rho(int rho) {
    if (rho != 1 && rho != -1) {
        throw Error(ErrorCode::InvalidSegment, "turn direction must be +1 or -1");
    }
}

// Accepts s within a rounding-sized band of [0, length] and clamps it.
inline double checked_arclength(const Segment& seg, double s) {
    const double slack = 1e-9 * (1.0 + seg.length);
    if (!(s >= -slack && s <= seg.length + slack)) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "arc length " + std::to_string(s) + " outside [0, " +
                        std::to_string(seg.length) + "]");
    }
    return std::clamp(s, 0.0, seg.length);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Fermat spiral closed forms

/// Polar angle at which the Fermat spiral curvature peaks. Independent of c.
inline double fermat_theta_kmax() {
    static const double value = std::sqrt(std::sqrt(7.0) / 2.0 - 5.0 / 4.0);
    return value;
}

/// Unsigned curvature of r = c*sqrt(theta).
inline double fermat_curvature(double c, double theta) {
    const double t2 = 4.0 * theta * theta;
    return 2.0 * std::sqrt(theta) * (t2 + 3.0) / (c * std::pow(t2 + 1.0, 1.5));
}

/// dk/ds of the unsigned curvature, moving away from the spiral origin.
inline double fermat_curvature_rate(double c, double theta) {
    const double th2 = theta * theta;
    const double q = 4.0 * th2 + 1.0;
    return 2.0 * (3.0 - 40.0 * th2 - 16.0 * th2 * th2) / (c * c * q * q * q);
}

/// Course change from the spiral origin to polar angle theta.
inline double fermat_course(double theta) { return theta + std::atan(2.0 * theta); }

/// Largest course change one transition spiral can provide (at theta_kmax).
inline double fermat_psi_max() {
    static const double value = fermat_course(fermat_theta_kmax());
    return value;
}

/// Shaping parameter c for which the spiral's peak curvature equals k_max.
inline double fermat_c_for_kmax(double k_max) {
    if (!(k_max > 0.0) || !std::isfinite(k_max)) {
        throw Error(ErrorCode::InvalidConfig, "k_max must be positive");
    }
    return fermat_curvature(1.0, fermat_theta_kmax()) / k_max;
}

namespace detail {

// Arc length of the c = 1 spiral from the origin to u = sqrt(theta):
// integral of sqrt(1 + 4 v^4) dv over [0, u].
inline double fermat_unit_length(double u) {
    return quadrature::integrate_scalar(
        [](double v) {
            const double v2 = v * v;
            return std::sqrt(1.0 + 4.0 * v2 * v2);
        },
        0.0, u);
}

inline double fermat_unit_length_kmax() {
    static const double value = fermat_unit_length(std::sqrt(fermat_theta_kmax()));
    return value;
}

} // namespace detail

/// Arc length from the spiral origin to polar angle theta.
inline double fermat_arclength(double c, double theta) {
    if (!(theta >= 0.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "polar angle must be non-negative");
    }
    if (theta == fermat_theta_kmax()) {
        return c * detail::fermat_unit_length_kmax();
    }
    return c * detail::fermat_unit_length(std::sqrt(theta));
}

/// Inverse of fermat_arclength on [0, theta_max]. Newton steps in u = sqrt(theta)
/// (where ds/du = c*sqrt(1 + 4u^4) is known exactly), kept inside a shrinking
/// bracket with bisection as the fallback.
inline double fermat_theta_from_arclength(double c, double s,
                                          double theta_max = fermat_theta_kmax()) {
    const double s_max = fermat_arclength(c, theta_max);
    const double slack = 1e-9 * (1.0 + s_max);
    if (!(s >= -slack && s <= s_max + slack)) {
        throw Error(ErrorCode::ParameterOutOfRange, "arc length beyond Fermat segment");
    }
    if (s <= 0.0) {
        return 0.0;
    }
    if (s >= s_max) {
        return theta_max;
    }
    const double target = s / c;
    double lo = 0.0;
    double hi = std::sqrt(theta_max);
    double u = std::min(target, hi);
    for (int iter = 0; iter < 60; ++iter) {
        const double residual = detail::fermat_unit_length(u) - target;
        if (residual == 0.0) {
            break;
        }
        if (residual > 0.0) {
            hi = u;
        } else {
            lo = u;
        }
        const double u4 = u * u * u * u;
        double next = u - residual / std::sqrt(1.0 + 4.0 * u4);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::fabs(next - u);
        u = next;
        if (step <= 1e-15 * (1.0 + u)) {
            break;
        }
    }
    return u * u;
}

// ---------------------------------------------------------------------------
// Segment construction

inline Segment make_line(Pose2 start, double length) {
    if (!(length >= 0.0)) {
        throw Error(ErrorCode::InvalidSegment, "line length must be non-negative");
    }
    start.psi = wrap_angle(start.psi);
    return Segment{start, length, LineParams{}};
}

inline Segment make_arc(Pose2 start, double radius, int rho, double length) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::InvalidSegment, "arc radius must be positive");
    }
    if (!(length >= 0.0)) {
        throw Error(ErrorCode::InvalidSegment, "arc length must be non-negative");
    }
    detail::check_rho(rho);
    start.psi = wrap_angle(start.psi);
    return Segment{start, length, ArcParams{radius, rho}};
}

inline Segment make_clothoid(Pose2 start, double k0, double sigma, double length) {
    if (!(length >= 0.0)) {
        throw Error(ErrorCode::InvalidSegment, "clothoid length must be non-negative");
    }
    start.psi = wrap_angle(start.psi);
    return Segment{start, length, ClothoidParams{k0, sigma}};
}

/// `origin` is the spiral origin pose: the first point of a forward segment,
/// the last point of a reflected one.
inline Segment make_fermat(Pose2 origin, double c, int rho, double theta_end,
                           bool reflected) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error(ErrorCode::InvalidSegment, "Fermat shaping parameter must be positive");
    }
    if (!(theta_end > 0.0 && theta_end <= fermat_theta_kmax() * (1.0 + 1e-12))) {
        throw Error(ErrorCode::InvalidSegment, "Fermat theta_end outside (0, theta_kmax]");
    }
    detail::check_rho(rho);
    origin.psi = wrap_angle(origin.psi);
    return Segment{origin, fermat_arclength(c, theta_end),
                   FermatParams{c, rho, theta_end, reflected}};
}

// ---------------------------------------------------------------------------
// Evaluation

inline PathPoint eval_line(const Segment& seg, double s) {
    s = detail::checked_arclength(seg, s);
    const Pose2& p0 = seg.start;
    return PathPoint{s, Pose2{p0.x + s * std::cos(p0.psi), p0.y + s * std::sin(p0.psi), p0.psi},
                     0.0, 0.0};
}

/// Circle of radius r whose centre sits r to the left (rho = +1) or right
/// (rho = -1) of the start pose.
inline PathPoint eval_arc(const Segment& seg, double s) {
    const auto& arc = seg.as<ArcParams>();
    if (!(arc.radius > 0.0)) {
        throw Error(ErrorCode::InvalidSegment, "arc radius must be positive");
    }
    s = detail::checked_arclength(seg, s);
    const Pose2& p0 = seg.start;
    const double rr = arc.rho * arc.radius;
    const double psi = p0.psi + arc.rho * s / arc.radius;
    return PathPoint{s,
                     Pose2{p0.x + rr * (std::sin(psi) - std::sin(p0.psi)),
                           p0.y - rr * (std::cos(psi) - std::cos(p0.psi)), wrap_angle(psi)},
                     arc.rho / arc.radius, 0.0};
}

/// Position offset along a clothoid: the Fresnel-type integrals
/// (int cos(phi), int sin(phi)) with phi = 0.5*sigma*xi^2 + k0*xi + psi0.
inline Offset2 fresnel_position(double psi0, double k0, double sigma, double s) {
    if (!(s >= 0.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "clothoid arc length must be non-negative");
    }
    const auto xy = quadrature::integrate<2>(
        [=](double xi) {
            const double phi = (0.5 * sigma * xi + k0) * xi + psi0;
            return std::array<double, 2>{std::cos(phi), std::sin(phi)};
        },
        0.0, s);
    return Offset2{xy[0], xy[1]};
}

inline PathPoint eval_clothoid(const Segment& seg, double s) {
    const auto& cl = seg.as<ClothoidParams>();
    s = detail::checked_arclength(seg, s);
    const Pose2& p0 = seg.start;
    const Offset2 d = fresnel_position(p0.psi, cl.k0, cl.sigma, s);
    return PathPoint{s,
                     Pose2{p0.x + d.x, p0.y + d.y,
                           wrap_angle(p0.psi + cl.k0 * s + 0.5 * cl.sigma * s * s)},
                     cl.k0 + cl.sigma * s, cl.sigma};
}

namespace detail {

// Evaluate a Fermat segment at polar angle `tau` measured from the spiral
// origin, with arc length `s` from the segment start already known.
inline PathPoint fermat_at_origin_angle(const Segment& seg, double tau, double s) {
    const auto& f = seg.as<FermatParams>();
    const Pose2& o = seg.start;
    const double r = f.c * std::sqrt(tau);
    const double k = f.rho * fermat_curvature(f.c, tau);
    const double kp = f.rho * fermat_curvature_rate(f.c, tau);
    if (!f.reflected) {
        const double polar = f.rho * tau + o.psi;
        return PathPoint{s,
                         Pose2{o.x + r * std::cos(polar), o.y + r * std::sin(polar),
                               wrap_angle(o.psi + f.rho * fermat_course(tau))},
                         k, kp};
    }
    // Travelled towards the origin: the spiral seen backwards from the anchor.
    const double polar = o.psi - f.rho * tau;
    return PathPoint{s,
                     Pose2{o.x - r * std::cos(polar), o.y - r * std::sin(polar),
                           wrap_angle(o.psi - f.rho * fermat_course(tau))},
                     k, -kp};
}

} // namespace detail

/// Evaluates a Fermat segment at its own polar-angle parameter theta in
/// [0, theta_end]. Forward segments measure theta from the spiral origin;
/// reflected segments measure it from their first point, reaching the anchor
/// at theta = theta_end.
inline PathPoint eval_fermat(const Segment& seg, double theta) {
    const auto& f = seg.as<FermatParams>();
    const double slack = 1e-12 * (1.0 + f.theta_end);
    if (!(theta >= -slack && theta <= f.theta_end + slack)) {
        throw Error(ErrorCode::ParameterOutOfRange, "polar angle outside Fermat segment");
    }
    theta = std::clamp(theta, 0.0, f.theta_end);
    if (!f.reflected) {
        return detail::fermat_at_origin_angle(seg, theta, fermat_arclength(f.c, theta));
    }
    const double tau = f.theta_end - theta;
    return detail::fermat_at_origin_angle(seg, tau,
                                          seg.length - fermat_arclength(f.c, tau));
}

/// Evaluates a Fermat segment by arc length from its first point.
inline PathPoint eval_fermat_at_length(const Segment& seg, double s) {
    const auto& f = seg.as<FermatParams>();
    s = detail::checked_arclength(seg, s);
    const double from_origin = f.reflected ? seg.length - s : s;
    double tau;
    if (from_origin <= 0.0) {
        tau = 0.0;
    } else if (from_origin >= seg.length) {
        tau = f.theta_end;
    } else {
        tau = fermat_theta_from_arclength(f.c, from_origin, f.theta_end);
    }
    return detail::fermat_at_origin_angle(seg, tau, s);
}

/// Arc-length evaluation for any segment kind.
inline PathPoint evaluate(const Segment& seg, double s) {
    switch (seg.kind()) {
    case SegmentKind::Line: return eval_line(seg, s);
    case SegmentKind::Arc: return eval_arc(seg, s);
    case SegmentKind::Clothoid: return eval_clothoid(seg, s);
    case SegmentKind::Fermat: return eval_fermat_at_length(seg, s);
    }
    throw Error(ErrorCode::InvalidSegment, "unknown segment kind");
}

inline PathPoint start_point(const Segment& seg) { return evaluate(seg, 0.0); }
inline PathPoint end_point(const Segment& seg) { return evaluate(seg, seg.length); }

} // namespace trajsynth

#endif // TRAJSYNTH_SEGMENTS_HPP
