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

#include "navsim/route/road_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "navsim/core/errors.hpp"

namespace navsim::route {

const char* to_string(RoadClass rc) {
  switch (rc) {
    case RoadClass::kUrbanMain:
      return "UrbanMain";
    case RoadClass::kResidential:
      return "Residential";
    case RoadClass::kUnstructured:
      return "Unstructured";
  }
  return "UrbanMain";
}

RoadClass road_class_from_string(const std::string& name) {
  if (name == "UrbanMain") return RoadClass::kUrbanMain;
  if (name == "Residential") return RoadClass::kResidential;
  if (name == "Unstructured") return RoadClass::kUnstructured;
  throw std::invalid_argument("unknown road class: " + name);
}

void RoadGraph::add_node(const NodeId& id, const Vec2& position) {
  if (id.empty()) {
    throw std::invalid_argument("road graph: empty node id");
  }
  nodes_[id] = RoadNode{position};
}

void RoadGraph::add_edge(const NodeId& from, const NodeId& to, RoadClass road_class,
                         double lane_width, double speed_limit, bool one_way, double length) {
  if (!has_node(from) || !has_node(to)) {
    throw std::invalid_argument("road graph: edge references unknown node '" +
                                (has_node(from) ? to : from) + "'");
  }
  const double straight = (nodes_.at(to).position - nodes_.at(from).position).norm();
  if (length <= 0.0) {
    length = straight;
  } else if (length < straight * (1.0 - 1e-9)) {
    throw std::invalid_argument("road graph: edge length shorter than node distance");
  }
  if (speed_limit <= 0.0) {
    throw std::invalid_argument("road graph: speed limit must be positive");
  }
  const std::size_t idx = edges_.size();
  edges_.push_back({from, to, length, road_class, lane_width, speed_limit, one_way});
  adjacency_[from].emplace_back(idx, to);
  if (!one_way) {
    adjacency_[to].emplace_back(idx, from);
  }
}

const RoadNode& RoadGraph::node(const NodeId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw std::invalid_argument("road graph: unknown node '" + id + "'");
  }
  return it->second;
}

const std::vector<std::pair<std::size_t, NodeId>>& RoadGraph::outgoing(const NodeId& id) const {
  static const std::vector<std::pair<std::size_t, NodeId>> kEmpty;
  auto it = adjacency_.find(id);
  return it == adjacency_.end() ? kEmpty : it->second;
}

Route plan_route(const RoadGraph& graph, const NodeId& start, const NodeId& goal) {
  if (!graph.has_node(start) || !graph.has_node(goal)) {
    throw std::invalid_argument("plan_route: unknown node '" +
                                (graph.has_node(start) ? goal : start) + "'");
  }
  Route route;
  if (start == goal) {
    route.nodes = {start};
    return route;
  }

  const Vec2 goal_pos = graph.node(goal).position;
  auto heuristic = [&](const NodeId& id) { return (graph.node(id).position - goal_pos).norm(); };

  // Frontier ordered by (f, node id): equal-f ties expand the smaller id.
  std::set<std::pair<double, NodeId>> open;
  std::map<NodeId, double> g;
  std::map<NodeId, std::pair<NodeId, std::size_t>> parent;  // node -> (prev, edge)
  std::set<NodeId> closed;

  g[start] = 0.0;
  open.insert({heuristic(start), start});

  while (!open.empty()) {
    const auto [f, current] = *open.begin();
    open.erase(open.begin());
    if (closed.count(current)) {
      continue;
    }
    if (current == goal) {
      break;
    }
    closed.insert(current);
    const double g_current = g.at(current);
    for (const auto& [edge_idx, next] : graph.outgoing(current)) {
      if (closed.count(next)) {
        continue;
      }
      const double candidate = g_current + graph.edges()[edge_idx].length;
      auto it = g.find(next);
      if (it == g.end() || candidate < it->second) {
        if (it != g.end()) {
          open.erase({it->second + heuristic(next), next});
        }
        g[next] = candidate;
        parent[next] = {current, edge_idx};
        open.insert({candidate + heuristic(next), next});
      }
    }
  }

  if (!parent.count(goal)) {
    throw UnreachableGoalError("plan_route: no path from '" + start + "' to '" + goal + "'");
  }

  std::vector<NodeId> rev_nodes{goal};
  std::vector<std::size_t> rev_edges;
  NodeId cursor = goal;
  while (cursor != start) {
    const auto& [prev, edge_idx] = parent.at(cursor);
    rev_edges.push_back(edge_idx);
    rev_nodes.push_back(prev);
    cursor = prev;
  }
  std::reverse(rev_nodes.begin(), rev_nodes.end());
  std::reverse(rev_edges.begin(), rev_edges.end());

  route.nodes = std::move(rev_nodes);
  route.edge_indices = std::move(rev_edges);
  for (const std::size_t idx : route.edge_indices) {
    route.total_length += graph.edges()[idx].length;
    route.road_classes.push_back(graph.edges()[idx].road_class);
  }
  return route;
}

RoadGraph add_demonstration(const RoadGraph& graph, const std::vector<Vec2>& polyline,
                            RoadClass road_class, const DemonstrationParams& params) {
  if (polyline.size() < 2) {
    throw std::invalid_argument("add_demonstration: polyline needs at least 2 points");
  }
  double extent = 0.0;
  for (const auto& p : polyline) {
    extent = std::max(extent, (p - polyline.front()).norm());
  }
  if (extent < 1e-9) {
    throw std::invalid_argument("add_demonstration: degenerate polyline (all points identical)");
  }

  RoadGraph out = graph;

  auto snap = [&](const Vec2& p) -> NodeId {
    NodeId best;
    double best_dist = params.snap_radius;
    for (const auto& [id, node] : out.nodes()) {
      const double d = (node.position - p).norm();
      if (d < best_dist || (d == best_dist && !best.empty() && id < best)) {
        best_dist = d;
        best = id;
      }
    }
    return best;
  };

  auto fresh_id = [&](std::size_t hint) {
    NodeId id = "demo_" + std::to_string(hint);
    std::size_t salt = hint;
    while (out.has_node(id)) {
      id = "demo_" + std::to_string(++salt);
    }
    return id;
  };

  std::vector<NodeId> chain;
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    // Drop consecutive duplicates so no zero-length edge is created.
    if (i > 0 && (polyline[i] - polyline[i - 1]).norm() < 1e-9) {
      continue;
    }
    NodeId id;
    if (i == 0 || i + 1 == polyline.size()) {
      id = snap(polyline[i]);
    }
    if (id.empty()) {
      id = fresh_id(out.nodes().size());
      out.add_node(id, polyline[i]);
    }
    if (!chain.empty() && chain.back() == id) {
      continue;
    }
    chain.push_back(id);
  }

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    out.add_edge(chain[i], chain[i + 1], road_class, params.lane_width, params.speed_limit,
                 params.one_way);
  }
  return out;
}

}  // namespace navsim::route
