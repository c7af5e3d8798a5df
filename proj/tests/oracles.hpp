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

// Reference computations used only by the tests. None of these call into the
// library's quadrature or root finders.

#ifndef TRAJSYNTH_TESTS_ORACLES_HPP
#define TRAJSYNTH_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <utility>

namespace oracle {

/// Maclaurin series of int_0^x cos(t^2/2) dt and int_0^x sin(t^2/2) dt.
inline std::pair<double, double> fresnel_series(double x) {
    double c = 0.0;
    double s = 0.0;
    // cos(z) = sum (-1)^n z^(2n)/(2n)!, z = t^2/2
    double term_fact = 1.0; // 1/(m)!
    for (int m = 0; m < 60; ++m) {
        if (m > 0) {
            term_fact /= m;
        }
        const double zpow = std::pow(0.5, m) * std::pow(x, 2 * m + 1) / (2 * m + 1);
        const double sign = ((m / 2) % 2 == 0) ? 1.0 : -1.0;
        if (m % 2 == 0) {
            c += sign * term_fact * zpow;
        } else {
            s += sign * term_fact * zpow;
        }
    }
    return {c, s};
}

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    }
    return acc * h / 3.0;
}

/// Golden-section maximisation on [a, b].
inline double argmax(const std::function<double(double)>& f, double a, double b) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < 200 && b - a > 1e-14; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

/// Plain bisection for an increasing function.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Unsigned Fermat curvature written out directly from r = c*sqrt(theta)
/// via the polar curvature formula (r^2 + 2r'^2 - r r'') / (r^2 + r'^2)^1.5.
inline double fermat_curvature_polar(double c, double theta) {
    const double r = c * std::sqrt(theta);
    const double r1 = 0.5 * c / std::sqrt(theta);
    const double r2 = -0.25 * c / (theta * std::sqrt(theta));
    return (r * r + 2.0 * r1 * r1 - r * r2) / std::pow(r * r + r1 * r1, 1.5);
}

} // namespace oracle

#endif // TRAJSYNTH_TESTS_ORACLES_HPP
