#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algconn/error.hpp"

namespace algconn {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric bit matrix (one row of 64-bit words per vertex).
/// Values are immutable once built; the edit functions below return new
/// graphs so both sides of a transformation can be kept around.
class Graph {
 public:
  Graph() : Graph(1) {}
  explicit Graph(std::size_t order);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex v) const noexcept;
  std::size_t max_degree() const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges, sorted.
  std::vector<Edge> edges() const;

  /// Row of the adjacency matrix as a single word. Requires order() <= 64.
  std::uint64_t row_word(Vertex v) const noexcept { return bits_[v * words_]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph graph_from_edges(std::size_t, std::span<const Edge>);
  friend Graph add_edge(const Graph&, Vertex, Vertex);
  friend Graph remove_edge(const Graph&, Vertex, Vertex);
  friend Graph add_graph(const Graph&, const Graph&);
  friend Graph permuted(const Graph&, std::span<const Vertex>);

  void set(Vertex u, Vertex v, bool on) noexcept;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Builds a graph from an edge list; duplicates collapse.
/// Throws Errc::IndexOutOfRange or Errc::LoopEdge.
Graph graph_from_edges(std::size_t order, std::span<const Edge> edges);
Graph graph_from_edges(std::size_t order, std::initializer_list<Edge> edges);

/// G + uv; uv must not already be an edge (Errc::EdgeExists).
Graph add_edge(const Graph& g, Vertex u, Vertex v);
/// G - uv; uv must be an edge (Errc::EdgeMissing).
Graph remove_edge(const Graph& g, Vertex u, Vertex v);
/// G + K with E(G+K) = E(G) ∪ E(K). K must have the same vertex set
/// (Errc::VertexSetMismatch) and contribute at least one new edge
/// (Errc::NoNewEdge).
Graph add_graph(const Graph& g, const Graph& k);

/// Relabels so that vertex v of g becomes perm[v].
Graph permuted(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

/// Cycle v0 v1 ... v(n-1) v0.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Laplacian D(G) - A(G) held in exact integers.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  /// Row-major copy in floating point.
  std::vector<double> to_dense() const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

LaplacianMatrix laplacian(const Graph& g);

/// X^T L(G) X evaluated edge by edge: sum over uv of (x_u - x_v)^2.
double quadratic_form(const Graph& g, std::span<const double> x);

/// Edge-list text "n; u-v,u-v,...". Whitespace is ignored; "n;" alone is
/// the empty graph. Throws Errc::MalformedEdgeList.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace algconn
