#pragma once

#include <array>
#include <optional>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

using VertexPath = std::vector<Vertex>;

/// k paths from source to target, pairwise sharing only their endpoints.
struct PathSystem {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<VertexPath> paths;
};

/// Checks every PathSystem invariant against g: endpoints, adjacency of
/// consecutive vertices, simple paths, pairwise inner-disjointness.
bool is_valid_path_system(const Graph& g, const PathSystem& ps);

/// Cut vertices, ascending. Throws Errc::Disconnected.
std::vector<Vertex> articulation_vertices(const Graph& g);

/// n >= 3, connected and without cut vertices.
bool is_biconnected(const Graph& g);

/// p(u, v): maximum number of pairwise inner-disjoint u-v paths, computed
/// as a unit vertex-capacity max-flow. Throws Errc::InvalidArgument if u == v.
std::size_t local_connectivity(const Graph& g, Vertex u, Vertex v);

/// Exactly k inner-disjoint u-v paths taken from the max-flow. Augmenting
/// paths are found by BFS scanning nodes in ascending index; the result is
/// sorted by second vertex. Throws Errc::InsufficientPaths if p(u, v) < k.
PathSystem inner_disjoint_paths(const Graph& g, Vertex u, Vertex v, std::size_t k);

/// Biconnected with m = n + 1.
bool is_theta(const Graph& g);

/// Sorted lengths of the three branch paths of a θ-graph; empty for
/// anything else. The triple determines the graph up to isomorphism.
std::optional<std::array<std::size_t, 3>> theta_path_lengths(const Graph& g);

inline constexpr std::size_t kHamiltonianMaxOrder = 12;

/// A spanning cycle starting at vertex 0 (closing edge implied), or nothing.
/// Throws Errc::OrderLimit above 12 vertices.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g);

}  // namespace algconn
