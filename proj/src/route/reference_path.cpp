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

#include "navsim/route/reference_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "navsim/core/geometry.hpp"

namespace navsim::route {

ReferencePath::ReferencePath(std::vector<PathSample> samples, double spacing)
    : samples_(std::move(samples)), spacing_(spacing) {
  if (samples_.size() < 2) {
    throw std::invalid_argument("reference path: needs at least 2 samples");
  }
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (samples_[i].s <= samples_[i - 1].s) {
      throw std::invalid_argument("reference path: arc length must strictly increase");
    }
  }
}

std::size_t ReferencePath::segment_before(double s) const {
  auto it = std::upper_bound(samples_.begin(), samples_.end(), s,
                             [](double v, const PathSample& p) { return v < p.s; });
  if (it == samples_.begin()) {
    return 0;
  }
  const std::size_t idx = static_cast<std::size_t>(it - samples_.begin()) - 1;
  return std::min(idx, samples_.size() - 2);
}

Vec2 ReferencePath::position_at(double s) const {
  const std::size_t i = segment_before(s);
  const PathSample& a = samples_[i];
  const PathSample& b = samples_[i + 1];
  const double u = std::clamp((s - a.s) / (b.s - a.s), 0.0, 1.0);
  return a.position() + u * (b.position() - a.position());
}

double ReferencePath::heading_at(double s) const {
  const std::size_t i = segment_before(s);
  const PathSample& a = samples_[i];
  const PathSample& b = samples_[i + 1];
  const double u = std::clamp((s - a.s) / (b.s - a.s), 0.0, 1.0);
  return lerp_angle(a.heading, b.heading, u);
}

double ReferencePath::curvature_at(double s) const {
  const std::size_t i = segment_before(s);
  const PathSample& a = samples_[i];
  const PathSample& b = samples_[i + 1];
  const double u = std::clamp((s - a.s) / (b.s - a.s), 0.0, 1.0);
  return a.curvature + u * (b.curvature - a.curvature);
}

double ReferencePath::speed_limit_at(double s) const {
  const std::size_t i = segment_before(s);
  return samples_[i].speed_limit;
}

Pose2D ReferencePath::pose_at(double s) const {
  const Vec2 p = position_at(s);
  return Pose2D(p.x(), p.y(), heading_at(s));
}

std::size_t ReferencePath::nearest_sample(const Vec2& p) const {
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const double d2 = (samples_[i].position() - p).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

std::vector<PathSample> resample_polyline(const std::vector<Vec2>& points, double spacing) {
  if (spacing <= 0.0) {
    throw std::invalid_argument("resample_polyline: spacing must be positive");
  }
  std::vector<Vec2> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (pts.empty() || (p - pts.back()).norm() > 1e-12) {
      pts.push_back(p);
    }
  }
  if (pts.size() < 2) {
    throw std::invalid_argument("resample_polyline: degenerate polyline");
  }

  std::vector<double> cum(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    cum[i] = cum[i - 1] + (pts[i] - pts[i - 1]).norm();
  }
  const double total = cum.back();

  // Positions at s = k * spacing plus a final sample at the exact end.
  std::vector<Vec2> pos;
  std::vector<double> s_vals;
  std::size_t seg = 0;
  for (double s = 0.0;; s += spacing) {
    if (s >= total - 1e-12) {
      break;
    }
    while (seg + 2 < cum.size() && cum[seg + 1] <= s) {
      ++seg;
    }
    const double seg_len = cum[seg + 1] - cum[seg];
    const double u = seg_len > 0.0 ? (s - cum[seg]) / seg_len : 0.0;
    pos.push_back(pts[seg] + u * (pts[seg + 1] - pts[seg]));
    s_vals.push_back(s);
  }
  pos.push_back(pts.back());
  s_vals.push_back(total);

  const std::size_t n = pos.size();
  std::vector<PathSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].x = pos[i].x();
    out[i].y = pos[i].y();
    out[i].s = s_vals[i];
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? i : i + 1;
    const Vec2 d = pos[hi] - pos[lo];
    out[i].heading = std::atan2(d.y(), d.x());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || i + 1 == n) {
      continue;
    }
    out[i].curvature =
        normalize_angle(out[i + 1].heading - out[i - 1].heading) / (s_vals[i + 1] - s_vals[i - 1]);
  }
  if (n > 2) {
    out[0].curvature = out[1].curvature;
    out[n - 1].curvature = out[n - 2].curvature;
  }
  return out;
}

ReferencePath route_to_reference(const RoadGraph& graph, const Route& route, double spacing) {
  if (spacing <= 0.0) {
    throw std::invalid_argument("route_to_reference: spacing must be positive");
  }
  if (route.edge_indices.empty() || route.nodes.size() < 2) {
    throw std::invalid_argument("route_to_reference: route has no edges");
  }

  std::vector<Vec2> polyline;
  polyline.reserve(route.nodes.size());
  for (const auto& id : route.nodes) {
    polyline.push_back(graph.node(id).position);
  }
  std::vector<PathSample> samples = resample_polyline(polyline, spacing);

  // Assign per-edge speed limits by arc-length interval (closed-open).
  std::vector<double> edge_end(route.edge_indices.size(), 0.0);
  double cum = 0.0;
  for (std::size_t e = 0; e < route.edge_indices.size(); ++e) {
    const auto& a = graph.node(route.nodes[e]).position;
    const auto& b = graph.node(route.nodes[e + 1]).position;
    cum += (b - a).norm();
    edge_end[e] = cum;
  }
  std::size_t e = 0;
  for (auto& sample : samples) {
    while (e + 1 < edge_end.size() && sample.s >= edge_end[e] - 1e-12) {
      ++e;
    }
    sample.speed_limit = graph.edges()[route.edge_indices[e]].speed_limit;
  }
  return ReferencePath(std::move(samples), spacing);
}

}  // namespace navsim::route
