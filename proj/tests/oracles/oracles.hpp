#pragma once

// Slow, independent reference implementations used only by the tests.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "algconn/graph.hpp"

namespace oracle {

using algconn::Graph;
using algconn::Vertex;
using Bits = std::vector<std::uint8_t>;

/// Upper triangle in graph6 order (column-major: 01, 02, 12, 03, ...).
Bits adjacency_bits(const Graph& g);

/// Minimum of adjacency_bits over every vertex permutation. n <= 8.
Bits permutation_minimum(const Graph& g);

/// Minimum over permutations that list vertices by descending degree
/// (ties permuted freely). Complete invariant, cheaper than the full search.
Bits degree_ordered_minimum(const Graph& g);

/// Explicit bijection search.
bool brute_isomorphic(const Graph& g, const Graph& h);

/// Buckets every labeled graph on n vertices passing `keep` by
/// permutation_minimum. n <= 6.
std::size_t labeled_class_count(std::size_t n, const std::function<bool(const Graph&)>& keep);

/// Level-by-level closure under edge addition from the empty graph,
/// deduplicated by degree_ordered_minimum. Returns the class set.
std::set<Bits> levelwise_classes(std::size_t n);
Graph from_bits(std::size_t n, const Bits& bits);

bool connected_by_bfs(const Graph& g);
/// n >= 3, connected, and connected after deleting any single vertex.
bool biconnected_by_deletion(const Graph& g);

/// Maximum number of pairwise inner-disjoint u-v paths by exhaustive
/// search over simple paths. Small graphs only.
std::size_t brute_local_connectivity(const Graph& g, Vertex u, Vertex v);
std::vector<std::vector<Vertex>> all_simple_paths(const Graph& g, Vertex u, Vertex v);

/// Exactly two degree-3 vertices, all others degree 2, connected, and three
/// inner-disjoint paths between the degree-3 pair.
bool theta_by_definition(const Graph& g);

/// Triples l1 <= l2 <= l3 summing to n + 1 with at most one 1.
std::vector<std::array<std::size_t, 3>> theta_triples(std::size_t n);

/// Hamiltonicity by trying every vertex order starting at 0.
bool brute_hamiltonian(const Graph& g);

/// Laplacian spectrum from Eigen's SelfAdjointEigenSolver, ascending.
std::vector<double> eigen_spectrum(const Graph& g);

}  // namespace oracle
