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

#ifndef TRAJSYNTH_SO3_HPP
#define TRAJSYNTH_SO3_HPP

#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "trajsynth/error.hpp"

namespace trajsynth::so3 {

inline Eigen::Matrix3d hat(const Eigen::Vector3d& w) {
    Eigen::Matrix3d m;
    m << 0.0, -w.z(), w.y(),
         w.z(), 0.0, -w.x(),
        -w.y(), w.x(), 0.0;
    return m;
}

inline Eigen::Vector3d vee(const Eigen::Matrix3d& m) {
    return Eigen::Vector3d(m(2, 1), m(0, 2), m(1, 0));
}

/// Rodrigues' formula.
inline Eigen::Matrix3d exp(const Eigen::Vector3d& w) {
    const double angle = w.norm();
    const Eigen::Matrix3d k = hat(w);
    double a;
    double b;
    if (angle < 1e-6) {
        const double a2 = angle * angle;
        a = 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
        b = 0.5 - a2 / 24.0 + a2 * a2 / 720.0;
    } else {
        a = std::sin(angle) / angle;
        b = (1.0 - std::cos(angle)) / (angle * angle);
    }
    return Eigen::Matrix3d::Identity() + a * k + b * k * k;
}

/// Rotation vector of R. Angles at or beyond pi - 1e-6 are rejected: the
/// axis is ill-conditioned there.
inline Eigen::Vector3d log(const Eigen::Matrix3d& r) {
    const Eigen::Vector3d skew = 0.5 * vee(r - r.transpose()); // sin(angle) * axis
    const double sin_angle = skew.norm();
    const double cos_angle = 0.5 * (r.trace() - 1.0);
    const double angle = std::atan2(sin_angle, cos_angle);
    if (angle >= std::numbers::pi - 1e-6) {
        throw Error(ErrorCode::NearSingularRotation, "rotation angle too close to pi");
    }
    if (sin_angle < 1e-12) {
        return skew; // angle ~ sin(angle) to within 1e-36
    }
    return (angle / sin_angle) * skew;
}

/// Navigation-to-body rotation for ZYX Euler angles (yaw psi, pitch theta,
/// roll phi). The body-to-navigation rotation is its transpose.
inline Eigen::Matrix3d rot_nb(double phi, double theta, double psi) {
    const double cf = std::cos(phi), sf = std::sin(phi);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(psi), sp = std::sin(psi);
    Eigen::Matrix3d r;
    r << ct * cp, ct * sp, -st,
         sf * st * cp - cf * sp, sf * st * sp + cf * cp, sf * ct,
         cf * st * cp + sf * sp, cf * st * sp - sf * cp, cf * ct;
    return r;
}

} // namespace trajsynth::so3

#endif // TRAJSYNTH_SO3_HPP
