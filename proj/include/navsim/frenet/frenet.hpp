// Copyright 2026 The navsim Authors
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

#ifndef NAVSIM_FRENET_FRENET_HPP_
#define NAVSIM_FRENET_FRENET_HPP_

#include "navsim/core/types.hpp"
#include "navsim/route/reference_path.hpp"

namespace navsim::frenet {

/// Position along the reference path: s is arc length, d the signed lateral
/// offset (left positive), d_prime/d_pprime its derivatives with respect
/// to s.
struct FrenetState {
  double s = 0.0;
  double d = 0.0;
  double d_prime = 0.0;
  double d_pprime = 0.0;
  double speed = 0.0;
};

/// Projects a pose onto the path. The foot point solves
/// (p - c(s)) . t(s) = 0 on the interpolated path model, so the projection
/// is the exact inverse of frenet_to_cartesian. Throws OffPathError when the
/// pose is farther than `corridor` from the path.
FrenetState project_to_frenet(const route::ReferencePath& path, const Pose2D& pose, double speed,
                              double corridor = 10.0);

/// Maps (s, d, d') back to a pose: position = c(s) + d * n(s), heading =
/// path heading + atan(d'). Throws SingularProjectionError when |d * k| >= 1
/// (the offset curve folds over).
Pose2D frenet_to_cartesian(const route::ReferencePath& path, const FrenetState& fs);

}  // namespace navsim::frenet

#endif  // NAVSIM_FRENET_FRENET_HPP_
