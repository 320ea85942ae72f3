// Copyright 2026 The nilgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILGRAPH_GRAPH_HPP
#define NILGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/finite_ring.hpp"
#include "nilgraph/spbw.hpp"

namespace nilgraph::graph {

enum class GraphKind { ZeroDivisor, Nilpotent, NilpotentSampled };
std::string_view to_string(GraphKind k) noexcept;

/// A finite simple graph with labelled vertices. Vertices carry either ring
/// elements (exact graphs) or polynomials (sampled graphs).
class NilGraph {
 public:
  NilGraph(GraphKind kind, std::string subject, std::vector<std::string> labels);

  GraphKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view label) const;

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_[u * labels_.size() + v]; }
  /// Sorted neighbour list.
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return nbrs_.at(v); }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Adds the undirected edge u -- v; self-loops are rejected.
  void connect(std::size_t u, std::size_t v);

  // Payloads; exactly one is filled, matching kind().
  std::vector<ring::Element> elements;
  std::vector<spbw::SkewPoly> polys;

  /// Sampled graphs: the vertex budget cut the enumeration short.
  bool truncated = false;
  /// Sampled graphs: candidates examined and candidates whose membership
  /// stayed unknown (no witness found in the pool).
  std::size_t candidates_examined = 0;
  std::size_t membership_unknown = 0;

 private:
  GraphKind kind_;
  std::string subject_;
  std::vector<std::string> labels_;
  std::vector<bool> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::size_t edges_ = 0;
};

/// Vertices Z_N(R) \ {0}, u ~ v iff uv is nilpotent.
NilGraph build_nilpotent_graph(const ring::FiniteRing& r);
/// Vertices Z(R)*, u ~ v iff uv = 0 or vu = 0.
NilGraph build_zero_divisor_graph(const ring::FiniteRing& r);

struct SamplerParams {
  std::size_t max_degree = 2;
  std::size_t max_vertices = 512;
  bool include_witnesses = true;
};

/// Constants and a x^alpha with a in Z_N(R)*, 0 < |alpha| <= max_degree: the
/// elements the path and cycle constructions of the extension use.
std::vector<spbw::SkewPoly> forced_witnesses(const spbw::Extension& ext, std::size_t max_degree);

/// Bounded sample of the nilpotent graph of the extension. A candidate f is a
/// vertex when some nonzero y in the witness pool (forced witnesses plus
/// vertices found so far) has f y nilpotent; adjacency uses the coefficient
/// criterion. Throws PreconditionUnverified when the criterion is unavailable.
NilGraph sample_spbw_graph(const spbw::Extension& ext, const SamplerParams& params = {});

enum class DiameterKind { Finite, Infinite, Undefined };

struct GraphMetrics {
  bool connected = false;
  DiameterKind diameter_kind = DiameterKind::Undefined;
  std::size_t diameter = 0;  ///< valid when Finite
  std::optional<std::size_t> girth;  ///< nullopt means infinite
  bool complete = false;
  /// Shortest path realising the diameter, and a shortest cycle.
  std::vector<std::size_t> diameter_path;
  std::vector<std::size_t> girth_cycle;
};

/// Exact all-pairs BFS diameter and per-edge-deletion girth.
GraphMetrics graph_metrics(const NilGraph& g);

/// BFS distances from one vertex; nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const NilGraph& g, std::size_t source);
/// Shortest-path length; nullopt when disconnected. Throws UnknownVertex.
std::optional<std::size_t> distance(const NilGraph& g, std::string_view u, std::string_view v);
/// Shortest path u .. v as vertex indices; empty when disconnected.
std::vector<std::size_t> shortest_path(const NilGraph& g, std::size_t u, std::size_t v);
/// Shortest path avoiding one edge, bounded by max_len edges; nullopt if none.
std::optional<std::size_t> distance_without_edge(const NilGraph& g, std::size_t u, std::size_t v,
                                                 std::size_t max_len);

enum class ExportFormat { Dot, Json };

std::string to_dot(const NilGraph& g);
std::string to_json(const NilGraph& g, const GraphMetrics& m);
std::string export_graph(const NilGraph& g, ExportFormat format);

}  // namespace nilgraph::graph

#endif  // NILGRAPH_GRAPH_HPP
