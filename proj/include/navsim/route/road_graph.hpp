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

#ifndef NAVSIM_ROUTE_ROAD_GRAPH_HPP_
#define NAVSIM_ROUTE_ROAD_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "navsim/core/types.hpp"

namespace navsim::route {

using NodeId = std::string;

enum class RoadClass { kUrbanMain, kResidential, kUnstructured };

const char* to_string(RoadClass rc);
RoadClass road_class_from_string(const std::string& name);

struct RoadNode {
  Vec2 position = Vec2::Zero();
};

struct RoadEdge {
  NodeId from;
  NodeId to;
  double length = 0.0;  // road distance, >= straight-line distance
  RoadClass road_class = RoadClass::kUrbanMain;
  double lane_width = 3.5;
  double speed_limit = 5.0;  // m/s
  bool one_way = false;
};

/// Topological road network. Nodes live in an ordered map and adjacency lists
/// are kept sorted by insertion, so traversals are deterministic.
class RoadGraph {
 public:
  void add_node(const NodeId& id, const Vec2& position);

  /// Adds an edge between existing nodes. `length <= 0` means "use the
  /// straight-line distance"; an explicit length shorter than that (beyond
  /// 1e-9 relative) is rejected.
  void add_edge(const NodeId& from, const NodeId& to, RoadClass road_class, double lane_width,
                double speed_limit, bool one_way = false, double length = 0.0);

  bool has_node(const NodeId& id) const { return nodes_.count(id) > 0; }
  const RoadNode& node(const NodeId& id) const;
  const std::map<NodeId, RoadNode>& nodes() const { return nodes_; }
  const std::vector<RoadEdge>& edges() const { return edges_; }

  /// Outgoing (edge index, neighbor id) pairs for a node, honoring one_way.
  const std::vector<std::pair<std::size_t, NodeId>>& outgoing(const NodeId& id) const;

 private:
  std::map<NodeId, RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
  std::map<NodeId, std::vector<std::pair<std::size_t, NodeId>>> adjacency_;
};

struct Route {
  std::vector<NodeId> nodes;
  std::vector<std::size_t> edge_indices;  // one per hop
  std::vector<RoadClass> road_classes;    // one per hop
  double total_length = 0.0;
};

/// A* over edge lengths with the Euclidean heuristic. Ties on f are broken
/// toward the smaller node id. Throws std::invalid_argument for unknown ids
/// and UnreachableGoalError when no path exists.
Route plan_route(const RoadGraph& graph, const NodeId& start, const NodeId& goal);

struct DemonstrationParams {
  double snap_radius = 2.0;  // m, endpoint snap to existing nodes
  double lane_width = 3.0;
  double speed_limit = 5.0;
  bool one_way = false;
};

/// Inserts a driven polyline as chained nodes and edges, snapping the
/// endpoints to nearby existing nodes. Returns the extended graph.
RoadGraph add_demonstration(const RoadGraph& graph, const std::vector<Vec2>& polyline,
                            RoadClass road_class, const DemonstrationParams& params = {});

}  // namespace navsim::route

#endif  // NAVSIM_ROUTE_ROAD_GRAPH_HPP_
