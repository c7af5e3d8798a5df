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

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "trajsynth/imu.hpp"

using namespace trajsynth;

namespace {

constexpr double g0 = standard_gravity;

// Rotation angle of R, computed from the quaternion rather than the trace.
double rotation_angle(const Eigen::Matrix3d& r) {
    return Eigen::AngleAxisd(Eigen::Quaterniond(r).normalized()).angle();
}

// Left-clothoid turn between two straight legs; contains every segment
// kind the comparison harness uses except Fermat.
SmoothPath clothoid_turn() {
    const std::vector<Point2> w{{0, 0}, {800, 0}, {800, 800}};
    return smooth_path(w, FilletConfig{FilletMethod::Clothoid, 0.005, 0.00005});
}

SmoothPath fermat_turn() {
    const std::vector<Point2> w{{0, 0}, {800, 0}, {300, -600}};
    return smooth_path(w, FilletConfig{FilletMethod::Fermat, 0.005, 0.00005});
}

} // namespace

TEST(So3, RotNbExamples) {
    EXPECT_TRUE(so3::rot_nb(0, 0, 0).isApprox(Eigen::Matrix3d::Identity(), 0.0));
    const Eigen::Vector3d north_in_body = so3::rot_nb(0, 0, pi / 2) * Eigen::Vector3d::UnitX();
    EXPECT_NEAR(north_in_body.x(), 0.0, 1e-15);
    EXPECT_NEAR(north_in_body.y(), -1.0, 1e-15);
    EXPECT_NEAR(north_in_body.z(), 0.0, 1e-15);
}

TEST(So3, RotNbMatchesComposedAxisRotations) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (int i = 0; i < 1000; ++i) {
        const double phi = u(rng), theta = 0.49 * u(rng), psi = u(rng);
        const Eigen::Matrix3d r = so3::rot_nb(phi, theta, psi);
        const Eigen::Matrix3d r_bn = (Eigen::AngleAxisd(psi, Eigen::Vector3d::UnitZ()) *
                                      Eigen::AngleAxisd(theta, Eigen::Vector3d::UnitY()) *
                                      Eigen::AngleAxisd(phi, Eigen::Vector3d::UnitX()))
                                         .toRotationMatrix();
        EXPECT_LE((r - r_bn.transpose()).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LE((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
    }
}

TEST(So3, LogExamples) {
    EXPECT_EQ(so3::log(Eigen::Matrix3d::Identity()), Eigen::Vector3d::Zero());
    const Eigen::Matrix3d rz = Eigen::AngleAxisd(0.1, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    const Eigen::Vector3d w = so3::log(rz);
    EXPECT_NEAR(w.x(), 0.0, 1e-16);
    EXPECT_NEAR(w.y(), 0.0, 1e-16);
    EXPECT_NEAR(w.z(), 0.1, 1e-15);
    const Eigen::Matrix3d flip = Eigen::AngleAxisd(pi - 1e-7, Eigen::Vector3d::UnitX()).toRotationMatrix();
    try {
        so3::log(flip);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NearSingularRotation);
    }
}

TEST(So3, ExpMatchesAngleAxis) {
    std::mt19937 rng(23);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        Eigen::Vector3d w(n(rng), n(rng), n(rng));
        w *= (i % 2 ? 1e-8 : 2.5) / w.norm();
        const Eigen::Matrix3d ref = Eigen::AngleAxisd(w.norm(), w.normalized()).toRotationMatrix();
        EXPECT_LE((so3::exp(w) - ref).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(So3, RoundTrip) {
    std::mt19937 rng(29);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        Eigen::Vector3d axis(n(rng), n(rng), n(rng));
        axis.normalize();
        const Eigen::Vector3d w = axis * (i % 4 == 0 ? 1e-3 * ang(rng) : ang(rng));
        const Eigen::Matrix3d r = so3::exp(w);
        EXPECT_LE((so3::log(r) - w).norm(), 1e-10);
        EXPECT_LE((so3::exp(so3::log(r)) - r).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Asg, StraightAndLevel) {
    const SmoothPath path({make_line(Pose2{0, 0, 0.8}, 300.0)});
    for (double t = 0.0; t <= 10.0; t += 1.0) {
        const ImuSample s = asg_sample(path, t, SpeedProfile::constant(30.0));
        EXPECT_LE((s.f_b - Eigen::Vector3d(0, 0, -g0)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_EQ(s.w_b, Eigen::Vector3d::Zero());
    }
}

TEST(Asg, SteadyTurnAtMaxCurvature) {
    const SmoothPath path({make_arc(Pose2{}, 200.0, 1, 600.0)});
    const ImuSample s = asg_sample(path, 7.3, SpeedProfile::constant(30.0));
    // Independent: phi = atan(V^2 k / g), q = psi_dot sin(phi), r = psi_dot cos(phi).
    const double phi = std::atan2(4.5, g0);
    EXPECT_NEAR(s.w_b.x(), 0.0, 1e-15);
    EXPECT_NEAR(s.w_b.y(), 0.15 * std::sin(phi), 1e-14);
    EXPECT_NEAR(s.w_b.z(), 0.15 * std::cos(phi), 1e-14);
    EXPECT_NEAR(s.w_b.y(), 0.0625590, 1e-6);
    EXPECT_NEAR(s.w_b.z(), 0.1363319, 1e-6);
    EXPECT_NEAR(s.f_b.y(), 0.0, 1e-12);
    EXPECT_NEAR(s.f_b.norm(), std::hypot(4.5, g0), 1e-12);
}

TEST(Asg, NoLateralSpecificForce) {
    for (const SmoothPath& path : {clothoid_turn(), fermat_turn()}) {
        const auto series = asg_series(path, SpeedProfile::constant(30.0), 0.05);
        for (const ImuSample& s : series) {
            EXPECT_LT(std::fabs(s.f_b.y()), 1e-9) << s.t;
        }
    }
}

TEST(Asg, PureFunctionOfTime) {
    const SmoothPath path = fermat_turn();
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    const auto coarse = asg_series(path, prof, 0.5);
    const auto fine = asg_series(path, prof, 0.1);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const ImuSample& a = coarse[k];
        const ImuSample& b = fine[5 * k];
        ASSERT_EQ(a.t, b.t);
        EXPECT_EQ(a.f_b, b.f_b);
        EXPECT_EQ(a.w_b, b.w_b);
    }
}

TEST(Asg, AttitudePropagation) {
    const SmoothPath path = clothoid_turn();
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    const double dt = 0.001;
    const auto states = sample_states(path, prof, dt);
    const auto imu = asg_series(path, prof, dt);
    const auto& cum = path.cum_length();
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < states.size(); ++k) {
        const double s0 = prof.s_dot * states[k].t;
        const double s1 = prof.s_dot * states[k + 1].t;
        bool junction = false;
        for (double c : cum) junction |= (c > s0 - 1e-9 && c < s1 + 1e-9);
        if (junction) continue;
        const auto r_bn = [](const AircraftState& s) {
            return so3::rot_nb(s.euler.x(), s.euler.y(), s.euler.z()).transpose().eval();
        };
        // Midpoint rate keeps the check second order.
        const Eigen::Vector3d w = 0.5 * (imu[k].w_b + imu[k + 1].w_b);
        const Eigen::Matrix3d pred = r_bn(states[k]) * so3::exp(w * dt);
        worst = std::max(worst, rotation_angle(pred.transpose() * r_bn(states[k + 1])));
    }
    EXPECT_LE(worst, 5e-6);
}

TEST(Rii, StraightConstantVelocity) {
    const SmoothPath path({make_line(Pose2{0, 0, -2.0}, 300.0)});
    const auto states = sample_states(path, SpeedProfile::constant(30.0), 0.1);
    const auto imu = rii_series(states, 0.1);
    ASSERT_EQ(imu.size(), states.size());
    for (const ImuSample& s : imu) {
        EXPECT_LE((s.f_b - Eigen::Vector3d(0, 0, -g0)).norm(), 1e-12);
        EXPECT_LE(s.w_b.norm(), 1e-12);
    }
}

TEST(Rii, YawStep) {
    AircraftState a, b;
    b.t = 0.1;
    b.euler.z() = 0.1;
    const std::vector<AircraftState> states{a, b};
    const auto imu = rii_series(states, 0.1);
    EXPECT_NEAR(imu[1].w_b.z(), 1.0, 1e-12);
    EXPECT_NEAR(imu[1].w_b.x(), 0.0, 1e-15);
    EXPECT_EQ(imu[0].w_b, imu[1].w_b);
    EXPECT_EQ(imu[0].t, 0.0);
}

TEST(Rii, Errors) {
    AircraftState a, b, c;
    b.t = 0.1;
    c.t = 0.25;
    const std::vector<AircraftState> bad{a, b, c};
    try {
        rii_series(bad, 0.1);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
        EXPECT_EQ(e.index().value_or(0), 2u);
    }
    const std::vector<AircraftState> one{a};
    EXPECT_THROW(rii_series(one, 0.1), Error);

    AircraftState flip;
    flip.t = 0.1;
    flip.euler.z() = pi;
    const std::vector<AircraftState> turn{a, flip};
    try {
        rii_series(turn, 0.1);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NearSingularRotation);
    }
}

TEST(Rii, ConvergesToAsg) {
    const SmoothPath path = fermat_turn();
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    const auto& cum = path.cum_length();
    double prev_f = 1e300, prev_w = 1e300;
    for (double dt : {0.1, 0.01, 0.001}) {
        const auto states = sample_states(path, prof, dt);
        const auto rii = rii_series(states, dt);
        const auto asg = asg_series(path, prof, dt);
        double ef = 0.0, ew = 0.0;
        for (std::size_t k = 1; k < rii.size(); ++k) {
            const double s0 = prof.s_dot * states[k - 1].t;
            const double s1 = prof.s_dot * states[k].t;
            bool junction = false;
            for (double c : cum) junction |= (c > s0 - 1e-9 && c < s1 + 1e-9);
            if (junction) continue;
            ef = std::max(ef, (rii[k].f_b - asg[k].f_b).norm());
            ew = std::max(ew, (rii[k].w_b - asg[k].w_b).norm());
        }
        EXPECT_LT(ef, prev_f) << dt;
        EXPECT_LT(ew, prev_w) << dt;
        prev_f = ef;
        prev_w = ew;
    }
}

TEST(GravityModel, Validate) {
    EXPECT_NO_THROW(GravityModel{}.validate());
    EXPECT_THROW(GravityModel{0.0}.validate(), Error);
    EXPECT_EQ(GravityModel{}.g_n().z(), g0);
}
