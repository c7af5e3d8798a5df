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

#ifndef TRAJSYNTH_ERROR_HPP
#define TRAJSYNTH_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace trajsynth {

enum class ErrorCode {
    ParameterOutOfRange,
    InvalidSegment,
    InvalidConfig,
    InvalidInput,
    DegenerateWaypoints,
    UnsmoothableCorner,
    InsufficientWaypointSpacing,
    NearSingularRotation,
    ParseError,
    IoError,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParameterOutOfRange: return "parameter-out-of-range";
    case ErrorCode::InvalidSegment: return "invalid-segment";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::DegenerateWaypoints: return "degenerate-waypoints";
    case ErrorCode::UnsmoothableCorner: return "unsmoothable-corner";
    case ErrorCode::InsufficientWaypointSpacing: return "insufficient-waypoint-spacing";
    case ErrorCode::NearSingularRotation: return "near-singular-rotation";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::IoError: return "io-error";
    }
    return "unknown";
}

/// Every failure in the library is reported with one of these. `index`
/// carries the waypoint index for corner errors and the 1-based line
/// number for parse errors.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what,
          std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

} // namespace trajsynth

#endif // TRAJSYNTH_ERROR_HPP
