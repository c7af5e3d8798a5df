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

#ifndef TRAJSYNTH_SMOOTHING_HPP
#define TRAJSYNTH_SMOOTHING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trajsynth/error.hpp"
#include "trajsynth/segments.hpp"

namespace trajsynth {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

enum class FilletMethod { Arc, Clothoid, Fermat };

inline const char* to_string(FilletMethod m) {
    switch (m) {
    case FilletMethod::Arc: return "arc";
    case FilletMethod::Clothoid: return "clothoid";
    case FilletMethod::Fermat: return "fermat";
    }
    return "unknown";
}

inline std::optional<FilletMethod> parse_fillet_method(const std::string& name) {
    if (name == "arc") return FilletMethod::Arc;
    if (name == "clothoid") return FilletMethod::Clothoid;
    if (name == "fermat") return FilletMethod::Fermat;
    return std::nullopt;
}

struct FilletConfig {
    FilletMethod method = FilletMethod::Clothoid;
    double k_max = 1.0;       // 1/m
    double k_prime_max = 1.0; // 1/m^2, clothoid fillets only

    void validate() const {
        if (!(k_max > 0.0) || !std::isfinite(k_max)) {
            throw Error(ErrorCode::InvalidConfig, "k_max must be positive");
        }
        if (!(k_prime_max > 0.0) || !std::isfinite(k_prime_max)) {
            throw Error(ErrorCode::InvalidConfig, "k_prime_max must be positive");
        }
    }
};

/// Course change at an interior waypoint.
struct Corner {
    Point2 w_prev;
    Point2 w_corner;
    Point2 w_next;
    double psi_delta = 0.0; // magnitude of the course change, [0, pi)
    double psi_1 = 0.0;     // entry course
    int rho = 1;            // +1 left, -1 right
};

/// Fillet segments placed in the path frame, plus the distance from the
/// corner waypoint to the attachment point on either leg.
struct Fillet {
    std::vector<Segment> segments;
    double d = 0.0;
};

struct AttachmentDistances {
    double d_t = 0.0;
    double d = 0.0;
};

/// Corners with a smaller course change get no fillet.
inline constexpr double min_fillet_angle = 1e-9;

inline Corner corner_geometry(Point2 w_prev, Point2 w_corner, Point2 w_next) {
    const double p1x = w_corner.x - w_prev.x;
    const double p1y = w_corner.y - w_prev.y;
    const double p2x = w_next.x - w_corner.x;
    const double p2y = w_next.y - w_corner.y;
    if ((p1x == 0.0 && p1y == 0.0) || (p2x == 0.0 && p2y == 0.0)) {
        throw Error(ErrorCode::DegenerateWaypoints, "coincident waypoints");
    }
    const double cross = p1x * p2y - p1y * p2x;
    const double dot = p1x * p2x + p1y * p2y;
    // Same angle as acos of the normalised dot product, without its loss of
    // precision near 0 and pi.
    const double psi_delta = std::atan2(std::fabs(cross), dot);
    if (psi_delta >= pi - 1e-9) {
        throw Error(ErrorCode::UnsmoothableCorner, "path reverses direction");
    }
    return Corner{w_prev, w_corner, w_next, psi_delta, std::atan2(p1y, p1x),
                  cross >= 0.0 ? 1 : -1};
}

/// Distance from the corner to the attachment point, given the fillet
/// midpoint (x_m, y_m) in the base frame (entry along +x from the attachment
/// point, left turn). The midpoint lies on the corner bisector.
inline AttachmentDistances attachment_distances(double x_m, double y_m, double psi_delta) {
    if (psi_delta >= pi - 1e-9) {
        throw Error(ErrorCode::UnsmoothableCorner, "attachment distance unbounded");
    }
    if (!(psi_delta >= 0.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "course change must be non-negative");
    }
    const double d_t = std::fabs(y_m * std::tan(0.5 * psi_delta));
    return AttachmentDistances{d_t, x_m + d_t};
}

/// Root of theta + atan(2*theta) = psi_t on [0, theta_kmax]. Halley steps with
/// bisection whenever a step leaves the bracket; stops once a Halley step
/// moves less than 1e-6.
inline double halley_theta(double psi_t) {
    const double psi_max = fermat_psi_max();
    if (!(psi_t >= 0.0 && psi_t <= psi_max * (1.0 + 1e-12))) {
        throw Error(ErrorCode::ParameterOutOfRange, "course change outside [0, psi_m]");
    }
    if (psi_t == 0.0) {
        return 0.0;
    }
    constexpr double eps = 1e-6;
    double lo = 0.0;
    double hi = fermat_theta_kmax();
    double theta = std::min(psi_t / 3.0, hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double q = 1.0 + 4.0 * theta * theta;
        const double f = theta + std::atan(2.0 * theta) - psi_t;
        if (f == 0.0) {
            return theta;
        }
        (f > 0.0 ? hi : lo) = theta;
        const double f1 = 1.0 + 2.0 / q;
        const double f2 = -16.0 * theta / (q * q);
        double next = theta - 2.0 * f * f1 / (2.0 * f1 * f1 - f * f2);
        bool halley = true;
        if (!(next >= lo && next <= hi)) {
            next = 0.5 * (lo + hi);
            halley = false;
        }
        const double step = std::fabs(next - theta);
        theta = next;
        if (halley && step < eps) {
            break;
        }
    }
    return theta;
}

namespace detail {

// Rigidly maps a base-frame segment (attachment at the origin, entry along
// +x, left turn) onto the attachment pose, mirroring for right turns.
inline Segment place_segment(const Segment& base, Pose2 attach, int rho) {
    const double c = std::cos(attach.psi);
    const double s = std::sin(attach.psi);
    const double by = rho * base.start.y;
    Segment out = base;
    out.start = Pose2{attach.x + c * base.start.x - s * by, attach.y + s * base.start.x + c * by,
                      wrap_angle(attach.psi + rho * base.start.psi)};
    std::visit(
        [rho](auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ArcParams> || std::is_same_v<P, FermatParams>) {
                p.rho *= rho;
            } else if constexpr (std::is_same_v<P, ClothoidParams>) {
                p.k0 *= rho;
                p.sigma *= rho;
            }
        },
        out.params);
    return out;
}

inline double leg_length(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

inline Fillet place_fillet(const Corner& corner, std::vector<Segment> base, double d) {
    if (d > leg_length(corner.w_prev, corner.w_corner) ||
        d > leg_length(corner.w_corner, corner.w_next)) {
        throw Error(ErrorCode::InsufficientWaypointSpacing,
                    "fillet needs " + std::to_string(d) + " m on each leg");
    }
    const Pose2 attach{corner.w_corner.x - d * std::cos(corner.psi_1),
                       corner.w_corner.y - d * std::sin(corner.psi_1), corner.psi_1};
    Fillet out;
    out.d = d;
    out.segments.reserve(base.size());
    for (const Segment& seg : base) {
        out.segments.push_back(place_segment(seg, attach, corner.rho));
    }
    return out;
}

// Exit pose of a symmetric fillet in the base frame: distance d past the
// corner (d, 0) along the exit leg.
inline Pose2 base_exit_pose(double d, double psi_delta) {
    return Pose2{d + d * std::cos(psi_delta), d * std::sin(psi_delta), psi_delta};
}

} // namespace detail

inline Fillet arc_fillet(const Corner& corner, const FilletConfig& cfg) {
    cfg.validate();
    if (corner.psi_delta < min_fillet_angle) {
        return {};
    }
    const double r = 1.0 / cfg.k_max;
    const Segment arc = make_arc(Pose2{}, r, 1, r * corner.psi_delta);
    const Pose2 mid = eval_arc(arc, 0.5 * arc.length).pos;
    const double d = attachment_distances(mid.x, mid.y, corner.psi_delta).d;
    return detail::place_fillet(corner, {arc}, d);
}

/// Course change of one clothoid ramping curvature from 0 to k_max.
inline double clothoid_psi_max(const FilletConfig& cfg) {
    return cfg.k_max * cfg.k_max / (2.0 * cfg.k_prime_max);
}

inline Fillet clothoid_fillet(const Corner& corner, const FilletConfig& cfg) {
    cfg.validate();
    if (corner.psi_delta < min_fillet_angle) {
        return {};
    }
    const double kp = cfg.k_prime_max;
    const double psi_delta = corner.psi_delta;
    std::vector<Segment> base;
    Pose2 mid;
    if (psi_delta <= 2.0 * clothoid_psi_max(cfg)) {
        const double s = std::sqrt(psi_delta / kp);
        base.push_back(make_clothoid(Pose2{}, 0.0, kp, s));
        const PathPoint t = end_point(base.back());
        base.push_back(make_clothoid(t.pos, t.k, -kp, s));
        mid = t.pos;
    } else {
        const double s = cfg.k_max / kp;
        base.push_back(make_clothoid(Pose2{}, 0.0, kp, s));
        const PathPoint t1 = end_point(base.back());
        const double phi = psi_delta - 2.0 * t1.pos.psi;
        const Segment arc = make_arc(t1.pos, 1.0 / cfg.k_max, 1, phi / cfg.k_max);
        mid = eval_arc(arc, 0.5 * arc.length).pos;
        const PathPoint t2 = end_point(arc);
        base.push_back(arc);
        base.push_back(make_clothoid(t2.pos, t2.k, -kp, s));
    }
    const double d = attachment_distances(mid.x, mid.y, psi_delta).d;
    return detail::place_fillet(corner, std::move(base), d);
}

inline Fillet fermat_fillet(const Corner& corner, const FilletConfig& cfg) {
    cfg.validate();
    if (corner.psi_delta < min_fillet_angle) {
        return {};
    }
    const double psi_delta = corner.psi_delta;
    const double c = fermat_c_for_kmax(cfg.k_max);
    const bool small = psi_delta <= 2.0 * fermat_psi_max();
    const double theta_end = small ? halley_theta(0.5 * psi_delta) : fermat_theta_kmax();

    std::vector<Segment> base;
    base.push_back(make_fermat(Pose2{}, c, 1, theta_end, false));
    const PathPoint t = eval_fermat(base.back(), theta_end);
    Pose2 mid = t.pos;
    if (!small) {
        const double phi = psi_delta - 2.0 * t.pos.psi;
        const Segment arc = make_arc(t.pos, 1.0 / cfg.k_max, 1, phi / cfg.k_max);
        mid = eval_arc(arc, 0.5 * arc.length).pos;
        base.push_back(arc);
    }
    const double d = attachment_distances(mid.x, mid.y, psi_delta).d;
    base.push_back(make_fermat(detail::base_exit_pose(d, psi_delta), c, 1, theta_end, true));
    return detail::place_fillet(corner, std::move(base), d);
}

inline Fillet make_fillet(const Corner& corner, const FilletConfig& cfg) {
    switch (cfg.method) {
    case FilletMethod::Arc: return arc_fillet(corner, cfg);
    case FilletMethod::Clothoid: return clothoid_fillet(corner, cfg);
    case FilletMethod::Fermat: return fermat_fillet(corner, cfg);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown fillet method");
}

struct PathSample {
    std::size_t index = 0; // segment index
    PathPoint point;       // point.s is local to the segment
};

/// Ordered segments with a cumulative arc-length index.
class SmoothPath {
public:
    SmoothPath() = default;

    explicit SmoothPath(std::vector<Segment> segments) : segments_(std::move(segments)) {
        cum_length_.reserve(segments_.size() + 1);
        for (const Segment& seg : segments_) {
            cum_length_.push_back(cum_length_.back() + seg.length);
        }
    }

    const std::vector<Segment>& segments() const { return segments_; }
    /// cum_length()[i] is the arc length at the start of segment i; the last
    /// entry is the total length.
    const std::vector<double>& cum_length() const { return cum_length_; }
    double total_length() const { return cum_length_.back(); }
    bool empty() const { return segments_.empty(); }

    /// Index of the segment containing path arc length s. Interior junctions
    /// belong to the later segment.
    std::size_t locate(double s) const {
        if (segments_.empty()) {
            throw Error(ErrorCode::InvalidInput, "empty path");
        }
        const double slack = 1e-9 * (1.0 + total_length());
        if (!(s >= -slack && s <= total_length() + slack)) {
            throw Error(ErrorCode::ParameterOutOfRange,
                        "path arc length " + std::to_string(s) + " outside path");
        }
        const auto it = std::upper_bound(cum_length_.begin(), cum_length_.end() - 1, s);
        const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
            0, std::distance(cum_length_.begin(), it) - 1));
        return std::min(idx, segments_.size() - 1);
    }

    PathSample sample(double s) const {
        const std::size_t i = locate(s);
        const double local = std::clamp(s - cum_length_[i], 0.0, segments_[i].length);
        return PathSample{i, evaluate(segments_[i], local)};
    }

private:
    std::vector<Segment> segments_;
    std::vector<double> cum_length_{0.0};
};

/// Smooths every interior corner of the polyline and joins the fillets with
/// the truncated straight legs.
inline SmoothPath smooth_path(std::span<const Point2> waypoints, const FilletConfig& cfg) {
    cfg.validate();
    const std::size_t n = waypoints.size();
    if (n < 2) {
        throw Error(ErrorCode::InvalidInput, "at least two waypoints are required");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (waypoints[i].x == waypoints[i + 1].x && waypoints[i].y == waypoints[i + 1].y) {
            throw Error(ErrorCode::DegenerateWaypoints, "coincident waypoints", i + 1);
        }
    }

    // d[i]: truncation at waypoint i (zero at the ends and where no fillet).
    std::vector<double> d(n, 0.0);
    std::vector<Fillet> fillets(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        try {
            const Corner corner = corner_geometry(waypoints[i - 1], waypoints[i], waypoints[i + 1]);
            fillets[i] = make_fillet(corner, cfg);
            d[i] = fillets[i].d;
        } catch (const Error& e) {
            throw Error(e.code(), std::string(e.what()) + " at waypoint " + std::to_string(i), i);
        }
    }

    std::vector<Segment> segments;
    std::optional<Point2> line_start;
    Point2 line_end;
    const auto flush_line = [&]() {
        if (!line_start) {
            return;
        }
        const double dx = line_end.x - line_start->x;
        const double dy = line_end.y - line_start->y;
        const double len = std::hypot(dx, dy);
        if (len > 1e-9) {
            segments.push_back(make_line(Pose2{line_start->x, line_start->y, std::atan2(dy, dx)}, len));
        }
        line_start.reset();
    };

    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Point2 a = waypoints[j];
        const Point2 b = waypoints[j + 1];
        const double leg = detail::leg_length(a, b);
        if (d[j] + d[j + 1] > leg * (1.0 + 1e-12)) {
            const std::size_t bad = (d[j + 1] > 0.0) ? j + 1 : j;
            throw Error(ErrorCode::InsufficientWaypointSpacing,
                        "fillets overlap on leg " + std::to_string(j) + " at waypoint " +
                            std::to_string(bad),
                        bad);
        }
        const double ux = (b.x - a.x) / leg;
        const double uy = (b.y - a.y) / leg;
        if (!line_start) {
            line_start = Point2{a.x + d[j] * ux, a.y + d[j] * uy};
        }
        line_end = Point2{b.x - d[j + 1] * ux, b.y - d[j + 1] * uy};
        if (j + 1 < n - 1 && !fillets[j + 1].segments.empty()) {
            flush_line();
            for (Segment& seg : fillets[j + 1].segments) {
                segments.push_back(std::move(seg));
            }
        }
    }
    flush_line();
    return SmoothPath(std::move(segments));
}

} // namespace trajsynth

#endif // TRAJSYNTH_SMOOTHING_HPP
