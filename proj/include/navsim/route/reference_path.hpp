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

#ifndef NAVSIM_ROUTE_REFERENCE_PATH_HPP_
#define NAVSIM_ROUTE_REFERENCE_PATH_HPP_

#include <cstddef>
#include <vector>

#include "navsim/core/types.hpp"
#include "navsim/route/road_graph.hpp"

namespace navsim::route {

struct PathSample {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double curvature = 0.0;
  double s = 0.0;           // arc length from path start
  double speed_limit = 0.0;

  Vec2 position() const { return {x, y}; }
};

/// Arc-length parameterized reference line. Queries interpolate between the
/// stored samples: positions and curvature linearly, headings on the
/// shortest arc. Out-of-range s is clamped.
class ReferencePath {
 public:
  ReferencePath() = default;
  ReferencePath(std::vector<PathSample> samples, double spacing);

  bool empty() const { return samples_.empty(); }
  double length() const { return samples_.empty() ? 0.0 : samples_.back().s; }
  double spacing() const { return spacing_; }
  const std::vector<PathSample>& samples() const { return samples_; }

  Vec2 position_at(double s) const;
  double heading_at(double s) const;
  double curvature_at(double s) const;
  double speed_limit_at(double s) const;
  Pose2D pose_at(double s) const;

  /// Index of the sample closest to p (first one on ties).
  std::size_t nearest_sample(const Vec2& p) const;

 private:
  std::size_t segment_before(double s) const;

  std::vector<PathSample> samples_;
  double spacing_ = 0.0;
};

/// Resamples a polyline at equal arc-length spacing, closing with a sample at
/// the exact end. Headings come from central-difference tangents and
/// curvature from the finite-difference heading change. speed_limit is left
/// at zero for the caller to fill.
std::vector<PathSample> resample_polyline(const std::vector<Vec2>& points, double spacing);

/// Equally spaced resampling of the concatenated route edges.
ReferencePath route_to_reference(const RoadGraph& graph, const Route& route, double spacing);

}  // namespace navsim::route

#endif  // NAVSIM_ROUTE_REFERENCE_PATH_HPP_
