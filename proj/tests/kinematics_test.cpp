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

#include <gtest/gtest.h>

#include "trajsynth/kinematics.hpp"

using namespace trajsynth;

namespace {

constexpr double g0 = standard_gravity;

// atan(4.5 / 9.80665), evaluated independently in extended precision.
constexpr double kRollAtKmax = 0.430207586158887864;

std::vector<Segment> kinds() {
    const double c = fermat_c_for_kmax(0.3);
    return {
        make_arc(Pose2{0, 0, 0.2}, 4.0, 1, 10.0),
        make_arc(Pose2{0, 0, 0.2}, 4.0, -1, 10.0),
        make_clothoid(Pose2{0, 0, 0.0}, 0.05, 0.02, 12.0),
        make_clothoid(Pose2{0, 0, 0.0}, -0.1, -0.015, 10.0),
        make_fermat(Pose2{0, 0, 0.0}, c, 1, fermat_theta_kmax(), false),
        make_fermat(Pose2{0, 0, 0.0}, c, -1, 0.2, false),
        make_fermat(Pose2{9, 9, 1.0}, c, 1, fermat_theta_kmax(), true),
        make_fermat(Pose2{9, 9, 1.0}, c, -1, 0.15, true),
    };
}

} // namespace

TEST(CourseRates, Examples) {
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    auto d = course_rates(make_line(Pose2{}, 10.0), 3.0, prof);
    EXPECT_EQ(d.psi_dot, 0.0);
    EXPECT_EQ(d.psi_ddot, 0.0);

    d = course_rates(make_arc(Pose2{}, 200.0, 1, 100.0), 50.0, prof);
    EXPECT_NEAR(d.psi_dot, 0.15, 1e-15);
    EXPECT_EQ(d.psi_ddot, 0.0);

    d = course_rates(make_clothoid(Pose2{}, 0.0, 3.0, 1.0), 0.5, SpeedProfile{2.0, 2.0, 0.0});
    EXPECT_NEAR(d.psi_dot, 3.0, 1e-15);
    EXPECT_NEAR(d.psi_ddot, 12.0, 1e-15);

    const Segment f = make_fermat(Pose2{}, 1.0, 1, 0.2, false);
    EXPECT_EQ(course_rates(f, 0.0, prof).psi_dot, 0.0);
    EXPECT_LT(std::fabs(course_rates(f, 1e-12, prof).psi_dot), 1e-9);

    EXPECT_THROW(course_rates(f, f.length * 1.1, prof), Error);
}

TEST(CoordinatedRoll, Examples) {
    EXPECT_EQ(coordinated_roll(0.0, 30.0, g0), 0.0);
    EXPECT_NEAR(coordinated_roll(0.15, 30.0, g0), 0.4300, 5e-4);
    EXPECT_NEAR(coordinated_roll(0.15, 30.0, g0), kRollAtKmax, 1e-14);
    EXPECT_LT(coordinated_roll(-0.15, 30.0, g0), 0.0);
    for (double w = -1.0; w <= 1.0; w += 0.01) {
        EXPECT_NEAR(g0 / 30.0 * std::tan(coordinated_roll(w, 30.0, g0)), w, 1e-12);
    }
}

TEST(RollRate, Examples) {
    EXPECT_EQ(roll_rate(0.0, 0.3, 30.0, g0), 0.0);
    EXPECT_DOUBLE_EQ(roll_rate(1.0, 0.0, g0, g0), 1.0);

    // Finite difference of the roll angle along a clothoid.
    const Segment cl = make_clothoid(Pose2{}, 0.01, 0.002, 40.0);
    const SpeedProfile prof = SpeedProfile::constant(25.0);
    const double h = 1e-3; // seconds
    for (double s = 5.0; s < 35.0; s += 5.0) {
        const double ds = prof.s_dot * h;
        const auto phi_at = [&](double ss) {
            return coordinated_roll(course_rates(cl, ss, prof).psi_dot, prof.v_a, g0);
        };
        const double fd = (phi_at(s + ds) - phi_at(s - ds)) / (2 * h);
        EXPECT_NEAR(coordinated_rates(cl, s, prof, g0).phi_dot, fd, 1e-4);
    }
}

TEST(BodyRates, Examples) {
    EXPECT_EQ(body_rates(0, 0, 0, 0), Eigen::Vector3d::Zero());
    const Eigen::Vector3d w = body_rates(0.43, 0.0, 0.15, 0.0);
    EXPECT_NEAR(w.x(), 0.0, 1e-15);
    EXPECT_NEAR(w.y(), 0.062531, 1e-6);
    EXPECT_NEAR(w.z(), 0.136345, 1e-6);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double phi = u(rng), psid = u(rng), phid = u(rng);
        EXPECT_NEAR(body_rates(phi, 0.0, psid, phid).norm(), std::hypot(phid, psid), 1e-14);
    }
}

TEST(AccelNed, Examples) {
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    EXPECT_EQ(accel_ned(0.7, prof, 0.0), Eigen::Vector3d::Zero());
    const Eigen::Vector3d a = accel_ned(0.0, prof, 0.15);
    EXPECT_NEAR(a.x(), 0.0, 1e-15);
    EXPECT_NEAR(a.y(), 4.5, 1e-15);
    EXPECT_EQ(a.z(), 0.0);
    for (double psi = -3.0; psi < 3.0; psi += 0.3) {
        EXPECT_NEAR(accel_ned(psi, prof, -0.07).norm(), 30.0 * 0.07, 1e-13);
    }
}

// psi_dot = k s_dot and psi_ddot against k' s_dot^2 + k s_ddot and a central
// difference of psi_dot in time.
TEST(CourseRates, FrenetIdentities) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const SpeedProfile prof{22.0, 22.0, 0.0};
    for (const Segment& seg : kinds()) {
        for (int i = 0; i < 1000; ++i) {
            const double s = seg.length * (0.01 + 0.98 * u01(rng));
            const PathPoint p = evaluate(seg, s);
            const CourseDerivatives d = course_rates(seg, s, prof);
            EXPECT_NEAR(d.psi_dot, p.k * prof.s_dot, 1e-12) << to_string(seg.kind());
            EXPECT_NEAR(d.psi_ddot, p.k_prime * prof.s_dot * prof.s_dot,
                        1e-9 * (1.0 + std::fabs(d.psi_ddot)))
                << to_string(seg.kind());
            const double ht = 1e-5 * seg.length / prof.s_dot;
            const double fd = (course_rates(seg, s + prof.s_dot * ht, prof).psi_dot -
                               course_rates(seg, s - prof.s_dot * ht, prof).psi_dot) /
                              (2 * ht);
            EXPECT_NEAR(fd, d.psi_ddot, 1e-5 * std::max(std::fabs(d.psi_ddot), 1e-3))
                << to_string(seg.kind());
        }
    }
}

TEST(CourseRates, SpeedScaling) {
    for (const Segment& seg : kinds()) {
        const double s = 0.6 * seg.length;
        const auto a = course_rates(seg, s, SpeedProfile::constant(15.0));
        const auto b = course_rates(seg, s, SpeedProfile::constant(30.0));
        EXPECT_NEAR(b.psi_dot, 2 * a.psi_dot, 1e-12);
        EXPECT_NEAR(b.psi_ddot, 4 * a.psi_ddot, 1e-12 * (1 + std::fabs(b.psi_ddot)));
    }
}

TEST(CourseRates, KeepsAccelerationTerms) {
    const SpeedProfile prof{30.0, 30.0, 1.5};
    const Segment arc = make_arc(Pose2{}, 50.0, -1, 10.0);
    EXPECT_NEAR(course_rates(arc, 5.0, prof).psi_ddot, -1.5 / 50.0, 1e-15);
    const Segment cl = make_clothoid(Pose2{}, 0.1, 0.01, 10.0);
    EXPECT_NEAR(course_rates(cl, 5.0, prof).psi_ddot, 0.01 * 900 + 0.15 * 1.5, 1e-12);
}

TEST(StateAt, StraightLine) {
    const SmoothPath path({make_line(Pose2{}, 600.0)});
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    const AircraftState st = state_at(path, 2.0, prof, NedOrigin{0, 0, -100});
    EXPECT_NEAR(st.pos_n.x(), 60.0, 1e-12);
    EXPECT_NEAR(st.pos_n.y(), 0.0, 1e-12);
    EXPECT_EQ(st.pos_n.z(), -100.0);
    EXPECT_NEAR(st.vel_n.x(), 30.0, 1e-12);
    EXPECT_EQ(st.euler.x(), 0.0);
    EXPECT_EQ(st.euler.y(), 0.0);
    EXPECT_THROW(state_at(path, 20.5, prof), Error);
    EXPECT_THROW(state_at(path, -0.1, prof), Error);
}

TEST(StateAt, RollOnMaxCurvatureArc) {
    const SmoothPath path({make_arc(Pose2{}, 200.0, 1, 300.0)});
    const SpeedProfile prof = SpeedProfile::constant(30.0);
    for (double t = 0.0; t <= 10.0; t += 0.5) {
        const AircraftState st = state_at(path, t, prof);
        EXPECT_NEAR(st.euler.x(), kRollAtKmax, 1e-12);
        EXPECT_NEAR(st.vel_n.norm(), 30.0, 1e-12);
    }
}

TEST(StateAt, ContinuousAtJunction) {
    const Segment a = make_clothoid(Pose2{}, 0.0, 0.001, 40.0);
    const PathPoint e = end_point(a);
    const Segment b = make_clothoid(e.pos, e.k, -0.001, 40.0);
    const SmoothPath path({a, b});
    const SpeedProfile prof = SpeedProfile::constant(20.0);
    const double tj = 40.0 / 20.0;
    const AircraftState before = state_at(path, tj - 1e-12, prof);
    const AircraftState at = state_at(path, tj, prof);
    EXPECT_LE((before.pos_n - at.pos_n).norm(), 1e-9);
    EXPECT_LE((before.euler - at.euler).norm(), 1e-9);
}

TEST(SampleStates, GridAndCount) {
    EXPECT_EQ(sample_count(10.0, 0.1), 101u);
    EXPECT_EQ(sample_count(10.05, 0.1), 101u);
    EXPECT_THROW(sample_count(1.0, 0.0), Error);
    const SmoothPath path({make_line(Pose2{0, 0, 1.0}, 300.0)});
    const auto states = sample_states(path, SpeedProfile::constant(30.0), 0.5);
    ASSERT_EQ(states.size(), 21u);
    for (std::size_t k = 0; k < states.size(); ++k) {
        EXPECT_DOUBLE_EQ(states[k].t, 0.5 * k);
        EXPECT_NEAR(states[k].euler.z(), 1.0, 1e-15);
    }
}
