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

#ifndef TRAJSYNTH_IMU_HPP
#define TRAJSYNTH_IMU_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "trajsynth/error.hpp"
#include "trajsynth/kinematics.hpp"
#include "trajsynth/smoothing.hpp"
#include "trajsynth/so3.hpp"

namespace trajsynth {

struct ImuSample {
    double t = 0.0;
    Eigen::Vector3d f_b = Eigen::Vector3d::Zero(); // specific force, m/s^2 (fwd, right, down)
    Eigen::Vector3d w_b = Eigen::Vector3d::Zero(); // angular rate p, q, r, rad/s
};

struct GravityModel {
    double g = standard_gravity; // down-positive

    Eigen::Vector3d g_n() const { return Eigen::Vector3d(0.0, 0.0, g); }

    void validate() const {
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw Error(ErrorCode::InvalidConfig, "gravity must be positive");
        }
    }
};

enum class Generator { Asg, Rii };

inline const char* to_string(Generator g) { return g == Generator::Asg ? "ASG" : "RII"; }

/// Analytic IMU sample at time t: curvilinear acceleration and coordinated
/// turn rates evaluated exactly at t.
inline ImuSample asg_sample(const SmoothPath& path, double t, const SpeedProfile& prof,
                            const GravityModel& gravity = {}) {
    const double s = arclength_at(path, t, prof);
    const PathSample ps = path.sample(s);
    const Segment& seg = path.segments()[ps.index];
    const CourseRates rates = coordinated_rates(seg, ps.point.s, prof, gravity.g);
    const double psi = ps.point.pos.psi;

    ImuSample out;
    out.t = t;
    out.f_b = so3::rot_nb(rates.phi, 0.0, psi) *
              (accel_ned(psi, prof, rates.psi_dot) - gravity.g_n());
    out.w_b = body_rates(rates.phi, 0.0, rates.psi_dot, rates.phi_dot);
    return out;
}

/// ASG samples on the grid t_k = k*dt.
inline std::vector<ImuSample> asg_series(const SmoothPath& path, const SpeedProfile& prof,
                                         double dt, const GravityModel& gravity = {}) {
    const double duration = path_duration(path, prof);
    const std::size_t n = sample_count(duration, dt);
    std::vector<ImuSample> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(asg_sample(path, std::min(static_cast<double>(k) * dt, duration), prof,
                                 gravity));
    }
    return out;
}

/// Reverse INS integration: finite-difference IMU signals from a uniformly
/// sampled state series. Sample k uses states k-1 and k; sample 0 repeats
/// sample 1.
inline std::vector<ImuSample> rii_series(std::span<const AircraftState> states, double dt,
                                         const GravityModel& gravity = {}) {
    if (states.size() < 2) {
        throw Error(ErrorCode::InvalidInput, "at least two states are required");
    }
    if (!(dt > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "sample period must be positive");
    }
    const double tol = 1e-9 * std::max(1.0, dt);
    const Eigen::Vector3d g_n = gravity.g_n();
    std::vector<ImuSample> out(states.size());

    Eigen::Matrix3d r_nb_prev =
        so3::rot_nb(states[0].euler.x(), states[0].euler.y(), states[0].euler.z());
    for (std::size_t k = 1; k < states.size(); ++k) {
        const AircraftState& prev = states[k - 1];
        const AircraftState& cur = states[k];
        if (std::fabs((cur.t - prev.t) - dt) > tol) {
            throw Error(ErrorCode::InvalidInput,
                        "state series is not uniformly spaced at index " + std::to_string(k), k);
        }
        const Eigen::Matrix3d r_nb = so3::rot_nb(cur.euler.x(), cur.euler.y(), cur.euler.z());
        // R_b^n(t_{k-1})^T R_b^n(t_k) = R_n^b(t_{k-1}) R_n^b(t_k)^T
        const Eigen::Matrix3d delta = r_nb_prev * r_nb.transpose();
        const Eigen::Vector3d v_dot = (cur.vel_n - prev.vel_n) / dt;
        out[k].t = cur.t;
        out[k].w_b = so3::log(delta) / dt;
        out[k].f_b = r_nb * (v_dot - g_n);
        r_nb_prev = r_nb;
    }
    out[0] = out[1];
    out[0].t = states[0].t;
    return out;
}

} // namespace trajsynth

#endif // TRAJSYNTH_IMU_HPP
