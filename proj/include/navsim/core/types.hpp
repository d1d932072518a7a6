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

#ifndef NAVSIM_CORE_TYPES_HPP_
#define NAVSIM_CORE_TYPES_HPP_

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

namespace navsim {

using Vec2 = Eigen::Vector2d;

double normalize_angle(double theta);

/// Planar pose. The heading is kept normalized in (-pi, pi].
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Pose2D() = default;
  Pose2D(double x_, double y_, double heading_)
      : x(x_), y(y_), heading(normalize_angle(heading_)) {}

  Vec2 position() const { return {x, y}; }
  Vec2 direction() const { return {std::cos(heading), std::sin(heading)}; }
  Vec2 left_normal() const { return {-std::sin(heading), std::cos(heading)}; }
};

/// Controller feedback: pose, speed, acceleration and actual steering angle
/// stamped on the simulated clock.
struct VehicleState {
  Pose2D pose;
  double speed = 0.0;        // m/s, >= 0 in forward gear
  double accel = 0.0;        // m/s^2
  double steer_angle = 0.0;  // rad
  double timestamp = 0.0;    // s
};

struct TrajectoryPoint {
  Pose2D pose;
  double speed = 0.0;        // m/s
  double accel = 0.0;        // m/s^2
  double curvature = 0.0;    // 1/m
  double time_offset = 0.0;  // s from trajectory start
};

/// Timestamped motion plan, the contract between planner and controller.
/// Nominal plans carry at least two points; a stop plan issued while already
/// at rest may degenerate to a single point.
struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::string frame_id = "map";

  bool empty() const { return points.empty(); }
  double duration() const {
    return points.empty() ? 0.0 : points.back().time_offset - points.front().time_offset;
  }
};

/// World agent description. `footprint` is a convex CCW polygon in the
/// obstacle body frame; `prediction` gives the world pose over time (a single
/// entry for static obstacles).
struct Obstacle {
  std::string id;
  std::vector<Vec2> footprint;
  std::vector<std::pair<double, Pose2D>> prediction;

  Pose2D pose_at(double t) const;
  std::vector<Vec2> polygon_at(double t) const;
};

/// Ego collision geometry. The vehicle reference point is the rear axle;
/// the body rectangle spans [-rear_axle_to_tail, length - rear_axle_to_tail]
/// longitudinally and [-width/2, width/2] laterally.
struct Footprint {
  double length = 1.6;
  double width = 0.9;
  double rear_axle_to_tail = 0.3;
};

struct Circle {
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
};

}  // namespace navsim

#endif  // NAVSIM_CORE_TYPES_HPP_
