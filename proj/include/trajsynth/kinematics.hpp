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

#ifndef TRAJSYNTH_KINEMATICS_HPP
#define TRAJSYNTH_KINEMATICS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "trajsynth/error.hpp"
#include "trajsynth/segments.hpp"
#include "trajsynth/smoothing.hpp"

namespace trajsynth {

inline constexpr double standard_gravity = 9.80665;

/// Path speed. The state generator flies at constant speed (s_ddot = 0);
/// course_rates() keeps the s_ddot terms for general profiles.
struct SpeedProfile {
    double v_a = 30.0;   // airspeed, m/s
    double s_dot = 30.0; // m/s
    double s_ddot = 0.0; // m/s^2

    static SpeedProfile constant(double v_a) {
        if (!(v_a > 0.0) || !std::isfinite(v_a)) {
            throw Error(ErrorCode::InvalidConfig, "airspeed must be positive");
        }
        return SpeedProfile{v_a, v_a, 0.0};
    }
};

/// NED offset of the plan-frame origin. Plan x maps to north, y to east.
struct NedOrigin {
    double north = 0.0;
    double east = 0.0;
    double down = 0.0;
};

struct AircraftState {
    double t = 0.0;
    Eigen::Vector3d pos_n = Eigen::Vector3d::Zero(); // north, east, down (m)
    Eigen::Vector3d vel_n = Eigen::Vector3d::Zero(); // m/s
    Eigen::Vector3d euler = Eigen::Vector3d::Zero(); // roll, pitch, yaw (rad), ZYX
};

struct CourseDerivatives {
    double psi_dot = 0.0;
    double psi_ddot = 0.0;
};

struct CourseRates {
    double psi_dot = 0.0;
    double psi_ddot = 0.0;
    double phi = 0.0;
    double phi_dot = 0.0;
};

namespace detail {

// Fermat spiral course rates in the u = sqrt(theta) variable. u_dot is signed:
// negative while a reflected segment runs towards its spiral origin.
inline CourseDerivatives fermat_course_rates(const FermatParams& f, double u, double u_dot,
                                             const SpeedProfile& prof) {
    const double u2 = u * u;
    const double u4 = u2 * u2;
    const double q = 4.0 * u4 + 1.0;
    const double root_q = std::sqrt(q);
    const double poly = 4.0 * u4 * u + 3.0 * u; // 4u^5 + 3u

    // psi_dot = rho * N / D
    const double num = 2.0 * prof.s_dot * poly * root_q;
    const double den = f.c * q * q;
    const double num1_dot = ((20.0 * u4 + 3.0) * root_q + 8.0 * u2 * u * poly / root_q) * u_dot;
    const double num_dot = 2.0 * (prof.s_ddot * poly * root_q + prof.s_dot * num1_dot);
    const double den_dot = 32.0 * f.c * q * u2 * u * u_dot;
    return CourseDerivatives{f.rho * num / den,
                             f.rho * (num_dot * den - den_dot * num) / (den * den)};
}

} // namespace detail

/// Time derivatives of the course angle at arc length s on a segment.
inline CourseDerivatives course_rates(const Segment& seg, double s, const SpeedProfile& prof) {
    switch (seg.kind()) {
    case SegmentKind::Line:
        detail::checked_arclength(seg, s);
        return {};
    case SegmentKind::Arc: {
        detail::checked_arclength(seg, s);
        const auto& arc = seg.as<ArcParams>();
        const double k = arc.rho / arc.radius;
        return CourseDerivatives{k * prof.s_dot, k * prof.s_ddot};
    }
    case SegmentKind::Clothoid: {
        s = detail::checked_arclength(seg, s);
        const auto& cl = seg.as<ClothoidParams>();
        const double k = cl.k0 + cl.sigma * s;
        return CourseDerivatives{k * prof.s_dot,
                                 cl.sigma * prof.s_dot * prof.s_dot + k * prof.s_ddot};
    }
    case SegmentKind::Fermat: {
        s = detail::checked_arclength(seg, s);
        const auto& f = seg.as<FermatParams>();
        const double from_origin = f.reflected ? seg.length - s : s;
        double theta;
        if (from_origin <= 0.0) {
            theta = 0.0;
        } else if (from_origin >= seg.length) {
            theta = f.theta_end;
        } else {
            theta = fermat_theta_from_arclength(f.c, from_origin, f.theta_end);
        }
        const double u = std::sqrt(theta);
        const double u_dot_mag = prof.s_dot / (f.c * std::sqrt(1.0 + 4.0 * theta * theta));
        return detail::fermat_course_rates(f, u, f.reflected ? -u_dot_mag : u_dot_mag, prof);
    }
    }
    throw Error(ErrorCode::InvalidSegment, "unknown segment kind");
}

/// Bank angle of a coordinated turn: psi_dot = (g / v_a) tan(phi).
inline double coordinated_roll(double psi_dot, double v_a, double g) {
    return std::atan(v_a * psi_dot / g);
}

inline double roll_rate(double psi_ddot, double phi, double v_a, double g) {
    const double c = std::cos(phi);
    return psi_ddot * (v_a / g) * c * c;
}

/// Body rates (p, q, r) from ZYX Euler angle rates, with zero pitch rate.
inline Eigen::Vector3d body_rates(double phi, double theta, double psi_dot, double phi_dot) {
    return Eigen::Vector3d(phi_dot - psi_dot * std::sin(theta),
                           psi_dot * std::sin(phi) * std::cos(theta),
                           psi_dot * std::cos(phi) * std::cos(theta));
}

/// Curvilinear acceleration in NED: s_ddot e_t + s_dot psi_dot e_n.
inline Eigen::Vector3d accel_ned(double psi, const SpeedProfile& prof, double psi_dot) {
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    return Eigen::Vector3d(prof.s_ddot * c - prof.s_dot * psi_dot * s,
                           prof.s_ddot * s + prof.s_dot * psi_dot * c, 0.0);
}

inline CourseRates coordinated_rates(const Segment& seg, double s, const SpeedProfile& prof,
                                     double g) {
    const CourseDerivatives d = course_rates(seg, s, prof);
    const double phi = coordinated_roll(d.psi_dot, prof.v_a, g);
    return CourseRates{d.psi_dot, d.psi_ddot, phi, roll_rate(d.psi_ddot, phi, prof.v_a, g)};
}

/// Flight time to cover the path at constant speed.
inline double path_duration(const SmoothPath& path, const SpeedProfile& prof) {
    return path.total_length() / prof.s_dot;
}

/// Arc length reached at time t, validated against the path duration.
inline double arclength_at(const SmoothPath& path, double t, const SpeedProfile& prof) {
    const double duration = path_duration(path, prof);
    if (!(t >= 0.0 && t <= duration * (1.0 + 1e-12) + 1e-12)) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "time " + std::to_string(t) + " outside [0, " + std::to_string(duration) + "]");
    }
    return std::min(prof.s_dot * t, path.total_length());
}

inline AircraftState state_at(const SmoothPath& path, double t, const SpeedProfile& prof,
                              const NedOrigin& origin = {}, double g = standard_gravity) {
    const double s = arclength_at(path, t, prof);
    const PathSample ps = path.sample(s);
    const Pose2& pose = ps.point.pos;
    const double psi_dot = ps.point.k * prof.s_dot;
    AircraftState st;
    st.t = t;
    st.pos_n = Eigen::Vector3d(origin.north + pose.x, origin.east + pose.y, origin.down);
    st.vel_n = Eigen::Vector3d(prof.s_dot * std::cos(pose.psi), prof.s_dot * std::sin(pose.psi), 0.0);
    st.euler = Eigen::Vector3d(coordinated_roll(psi_dot, prof.v_a, g), 0.0, pose.psi);
    return st;
}

/// Number of samples k*dt that fit in [0, duration].
inline std::size_t sample_count(double duration, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::InvalidConfig, "sample period must be positive");
    }
    return static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
}

/// States at t_k = k*dt over the whole path.
inline std::vector<AircraftState> sample_states(const SmoothPath& path, const SpeedProfile& prof,
                                                double dt, const NedOrigin& origin = {},
                                                double g = standard_gravity) {
    const double duration = path_duration(path, prof);
    const std::size_t n = sample_count(duration, dt);
    std::vector<AircraftState> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(state_at(path, std::min(static_cast<double>(k) * dt, duration), prof,
                               origin, g));
    }
    return out;
}

} // namespace trajsynth

#endif // TRAJSYNTH_KINEMATICS_HPP
