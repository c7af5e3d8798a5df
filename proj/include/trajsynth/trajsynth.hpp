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

#ifndef TRAJSYNTH_TRAJSYNTH_HPP
#define TRAJSYNTH_TRAJSYNTH_HPP

#include "trajsynth/error.hpp"
#include "trajsynth/imu.hpp"
#include "trajsynth/io.hpp"
#include "trajsynth/kinematics.hpp"
#include "trajsynth/scenario.hpp"
#include "trajsynth/segments.hpp"
#include "trajsynth/smoothing.hpp"
#include "trajsynth/so3.hpp"

#endif // TRAJSYNTH_TRAJSYNTH_HPP
