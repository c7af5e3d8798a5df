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

#ifndef TRAJSYNTH_QUADRATURE_HPP
#define TRAJSYNTH_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace trajsynth::quadrature {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss-Legendre rule, on [-1, 1].
// Entries at odd indices (and the centre) are shared with the Gauss rule.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Panel {
    std::array<double, N> value{};
    double error = 0.0;
};

template <std::size_t N, class F>
Panel<N> gauss_kronrod_panel(F&& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, N> kronrod{};
    std::array<double, N> gauss{};

    const auto accumulate = [&](std::size_t i, const std::array<double, N>& fx) {
        for (std::size_t c = 0; c < N; ++c) {
            kronrod[c] += kronrod_weights[i] * fx[c];
            if (i % 2 == 1) {
                gauss[c] += gauss_weights[i / 2] * fx[c];
            }
        }
    };

    const std::array<double, N> fc = f(centre);
    for (std::size_t c = 0; c < N; ++c) {
        kronrod[c] = kronrod_weights[7] * fc[c];
        gauss[c] = gauss_weights[3] * fc[c];
    }
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        accumulate(i, f(centre - dx));
        accumulate(i, f(centre + dx));
    }

    Panel<N> panel;
    for (std::size_t c = 0; c < N; ++c) {
        panel.value[c] = kronrod[c] * half;
        panel.error = std::fmax(panel.error, std::fabs((kronrod[c] - gauss[c]) * half));
    }
    return panel;
}

template <std::size_t N, class F>
std::array<double, N> adaptive(F& f, double a, double b, double tol, int depth) {
    const Panel<N> whole = gauss_kronrod_panel<N>(f, a, b);
    if (whole.error <= tol || depth <= 0) {
        return whole.value;
    }
    const double mid = 0.5 * (a + b);
    std::array<double, N> left = adaptive<N>(f, a, mid, 0.5 * tol, depth - 1);
    const std::array<double, N> right = adaptive<N>(f, mid, b, 0.5 * tol, depth - 1);
    for (std::size_t c = 0; c < N; ++c) {
        left[c] += right[c];
    }
    return left;
}

} // namespace detail

inline constexpr double default_tolerance = 1e-10;

/// Adaptive Gauss-Kronrod (G7/K15) integration of a vector-valued integrand
/// `f: double -> std::array<double, N>` over [a, b]. Panels are bisected until
/// the Gauss/Kronrod difference of every component is within the panel's
/// share of `abs_tol`.
template <std::size_t N, class F>
std::array<double, N> integrate(F&& f, double a, double b,
                                double abs_tol = default_tolerance) {
    if (a == b) {
        return {};
    }
    return detail::adaptive<N>(f, a, b, abs_tol, 40);
}

template <class F>
double integrate_scalar(F&& f, double a, double b, double abs_tol = default_tolerance) {
    auto wrapped = [&f](double x) { return std::array<double, 1>{f(x)}; };
    return integrate<1>(wrapped, a, b, abs_tol)[0];
}

} // namespace trajsynth::quadrature

#endif // TRAJSYNTH_QUADRATURE_HPP
