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

#include "navsim/core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace navsim {

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("normalize_angle: non-finite angle");
  }
  double r = std::fmod(theta + M_PI, 2.0 * M_PI);
  if (r <= 0.0) {
    r += 2.0 * M_PI;
  }
  return r - M_PI;
}

double lerp_angle(double from, double to, double u) {
  return normalize_angle(from + u * normalize_angle(to - from));
}

namespace {

TrajectoryPoint lerp_point(const TrajectoryPoint& a, const TrajectoryPoint& b, double t) {
  const double dt = b.time_offset - a.time_offset;
  const double u = dt > 0.0 ? (t - a.time_offset) / dt : 0.0;
  TrajectoryPoint out;
  out.pose = Pose2D(a.pose.x + u * (b.pose.x - a.pose.x), a.pose.y + u * (b.pose.y - a.pose.y),
                    lerp_angle(a.pose.heading, b.pose.heading, u));
  out.speed = a.speed + u * (b.speed - a.speed);
  out.accel = a.accel + u * (b.accel - a.accel);
  out.curvature = a.curvature + u * (b.curvature - a.curvature);
  out.time_offset = t;
  return out;
}

}  // namespace

TrajectoryPoint interpolate(const Trajectory& traj, double t) {
  if (traj.points.empty()) {
    throw std::out_of_range("interpolate: empty trajectory");
  }
  const auto& pts = traj.points;
  if (t < pts.front().time_offset || t > pts.back().time_offset) {
    throw std::out_of_range("interpolate: query time outside trajectory span");
  }
  // Knot times must reproduce the stored point bit-for-bit.
  auto it = std::lower_bound(pts.begin(), pts.end(), t,
                             [](const TrajectoryPoint& p, double v) { return p.time_offset < v; });
  if (it != pts.end() && it->time_offset == t) {
    return *it;
  }
  return lerp_point(*(it - 1), *it, t);
}

TrajectoryPoint interpolate_clamped(const Trajectory& traj, double t) {
  if (traj.points.empty()) {
    throw std::out_of_range("interpolate_clamped: empty trajectory");
  }
  const double lo = traj.points.front().time_offset;
  const double hi = traj.points.back().time_offset;
  return interpolate(traj, std::clamp(t, lo, hi));
}

std::vector<Circle> footprint_circles(const Footprint& fp, const Pose2D& pose, int n) {
  if (n < 1) {
    throw std::invalid_argument("footprint_circles: need at least one circle");
  }
  const double step = fp.length / n;
  const double radius = std::hypot(0.5 * step, 0.5 * fp.width);
  const Vec2 dir = pose.direction();
  std::vector<Circle> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lon = -fp.rear_axle_to_tail + (i + 0.5) * step;
    out.push_back({pose.position() + lon * dir, radius});
  }
  return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
  double twice = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    twice += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * twice;
}

bool polygon_is_convex_ccw(const std::vector<Vec2>& poly) {
  const std::size_t n = poly.size();
  if (n < 3) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = poly[(i + 1) % n] - poly[i];
    const Vec2 e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
    if (e1.x() * e2.y() - e1.y() * e2.x() < 0.0) {
      return false;
    }
  }
  return polygon_area(poly) > 0.0;
}

double distance_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) {
    return (p - a).norm();
  }
  const double u = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + u * ab)).norm();
}

double signed_distance_to_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
  const std::size_t n = poly.size();
  double boundary = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    boundary = std::min(boundary, distance_point_segment(p, a, b));
    const Vec2 e = b - a;
    if (e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x()) < 0.0) {
      inside = false;
    }
  }
  return inside ? -boundary : boundary;
}

namespace {

bool separated_on_any_axis(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 edge = a[(i + 1) % n] - a[i];
    const Vec2 axis(-edge.y(), edge.x());
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    for (const auto& p : a) {
      const double v = axis.dot(p);
      amin = std::min(amin, v);
      amax = std::max(amax, v);
    }
    double bmin = std::numeric_limits<double>::infinity(), bmax = -bmin;
    for (const auto& p : b) {
      const double v = axis.dot(p);
      bmin = std::min(bmin, v);
      bmax = std::max(bmax, v);
    }
    if (amax < bmin || bmax < amin) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool polygons_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.size() < 3 || b.size() < 3) {
    return false;
  }
  return !separated_on_any_axis(a, b) && !separated_on_any_axis(b, a);
}

std::vector<Vec2> footprint_polygon(const Footprint& fp, const Pose2D& pose) {
  const Vec2 dir = pose.direction();
  const Vec2 left = pose.left_normal();
  const Vec2 tail = pose.position() - fp.rear_axle_to_tail * dir;
  const Vec2 nose = tail + fp.length * dir;
  const double h = 0.5 * fp.width;
  return {tail - h * left, nose - h * left, nose + h * left, tail + h * left};
}

Pose2D Obstacle::pose_at(double t) const {
  if (prediction.empty()) {
    return Pose2D();
  }
  if (prediction.size() == 1 || t <= prediction.front().first) {
    return prediction.front().second;
  }
  if (t >= prediction.back().first) {
    return prediction.back().second;
  }
  auto it = std::lower_bound(
      prediction.begin(), prediction.end(), t,
      [](const std::pair<double, Pose2D>& e, double v) { return e.first < v; });
  if (it->first == t) {
    return it->second;
  }
  const auto& [t1, p1] = *(it - 1);
  const auto& [t2, p2] = *it;
  const double u = (t - t1) / (t2 - t1);
  return Pose2D(p1.x + u * (p2.x - p1.x), p1.y + u * (p2.y - p1.y),
                lerp_angle(p1.heading, p2.heading, u));
}

std::vector<Vec2> Obstacle::polygon_at(double t) const {
  const Pose2D pose = pose_at(t);
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  std::vector<Vec2> out;
  out.reserve(footprint.size());
  for (const auto& v : footprint) {
    out.emplace_back(pose.x + c * v.x() - s * v.y(), pose.y + s * v.x() + c * v.y());
  }
  return out;
}

}  // namespace navsim
