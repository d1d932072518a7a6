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

#ifndef NAVSIM_CORE_GEOMETRY_HPP_
#define NAVSIM_CORE_GEOMETRY_HPP_

#include <vector>

#include "navsim/core/types.hpp"

namespace navsim {

/// Wraps a finite angle into (-pi, pi]. Throws std::invalid_argument on
/// non-finite input.
double normalize_angle(double theta);

/// Shortest-arc interpolation between two angles, u in [0, 1].
double lerp_angle(double from, double to, double u);

/// Samples a trajectory at time offset t. Knot times reproduce the stored
/// point exactly; between knots x, y, speed, accel and curvature are linear
/// and the heading follows the shortest arc. Throws std::out_of_range when t
/// is outside [first, last].
TrajectoryPoint interpolate(const Trajectory& traj, double t);

/// Same as interpolate() but clamps t into the covered range (holds the end
/// points), for callers that sample past the horizon.
TrajectoryPoint interpolate_clamped(const Trajectory& traj, double t);

/// Decomposes the oriented footprint rectangle into n equal circles whose
/// union covers it: radius = hypot(length / (2n), width / 2), centers spaced
/// length/n apart along the heading. Throws std::invalid_argument for n < 1.
std::vector<Circle> footprint_circles(const Footprint& fp, const Pose2D& pose, int n);

// -- Convex polygon helpers ------------------------------------------------

double polygon_area(const std::vector<Vec2>& poly);
bool polygon_is_convex_ccw(const std::vector<Vec2>& poly);

double distance_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

/// Distance from a point to a convex polygon boundary; negative inside
/// (penetration depth), positive outside.
double signed_distance_to_polygon(const std::vector<Vec2>& poly, const Vec2& p);

/// Exact convex-convex overlap test (separating axis).
bool polygons_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

/// Corner points of an oriented footprint rectangle, CCW.
std::vector<Vec2> footprint_polygon(const Footprint& fp, const Pose2D& pose);

}  // namespace navsim

#endif  // NAVSIM_CORE_GEOMETRY_HPP_
