#include <algorithm>

#include "algconn/connectivity.hpp"
#include "algconn/enumeration.hpp"
#include "algconn/families.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace algconn;

namespace {

void check_path_system(const Graph& g, const PathSystem& ps) {
  CHECK(is_valid_path_system(g, ps));
  std::vector<int> seen(g.order(), 0);
  for (const VertexPath& p : ps.paths) {
    REQUIRE(p.size() >= 2);
    CHECK(p.front() == ps.source);
    CHECK(p.back() == ps.target);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
    for (std::size_t i = 1; i + 1 < p.size(); ++i) CHECK(++seen[p[i]] == 1);
  }
}

std::vector<std::size_t> lengths(const PathSystem& ps) {
  std::vector<std::size_t> out;
  for (const auto& p : ps.paths) out.push_back(p.size() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("articulation vertices") {
  const Graph bowtie = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(articulation_vertices(bowtie) == std::vector<Vertex>{2});
  CHECK(articulation_vertices(cycle_graph(6)).empty());
  CHECK(articulation_vertices(path_graph(4)) == std::vector<Vertex>{1, 2});
  CHECK_ERRC(articulation_vertices(graph_from_edges(4, {{0, 1}, {2, 3}})), Errc::Disconnected);
}

TEST_CASE("biconnectivity examples") {
  CHECK(is_biconnected(cycle_graph(4)));
  CHECK_FALSE(is_biconnected(complete_graph(2)));
  CHECK_FALSE(is_biconnected(Graph(1)));
  CHECK(is_biconnected(complete_bipartite_graph(2, 3)));
  CHECK_FALSE(is_biconnected(graph_from_edges(4, {{0, 1}, {2, 3}})));
  const Graph k23 = complete_bipartite_graph(2, 3);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) CHECK(oracle::brute_local_connectivity(k23, u, v) >= 2);
}

TEST_CASE("local connectivity examples") {
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) CHECK(local_connectivity(cycle_graph(5), u, v) == 2);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(local_connectivity(complete_graph(4), u, v) == 3);
  const Graph k23 = complete_bipartite_graph(2, 3);
  CHECK(local_connectivity(k23, 0, 2) == 2);
  CHECK(local_connectivity(k23, 0, 1) == 3);
  CHECK(local_connectivity(k23, 2, 3) == 2);
  CHECK(oracle::brute_local_connectivity(k23, 0, 2) == 2);
  CHECK(oracle::brute_local_connectivity(k23, 0, 1) == 3);
  CHECK_ERRC(local_connectivity(k23, 1, 1), Errc::InvalidArgument);
}

TEST_CASE("inner disjoint path examples") {
  const PathSystem c5 = inner_disjoint_paths(cycle_graph(5), 0, 2, 2);
  check_path_system(cycle_graph(5), c5);
  CHECK(c5.paths == std::vector<VertexPath>{{0, 1, 2}, {0, 4, 3, 2}});

  const Graph k23 = complete_bipartite_graph(2, 3);
  const PathSystem three = inner_disjoint_paths(k23, 0, 1, 3);
  check_path_system(k23, three);
  CHECK(lengths(three) == std::vector<std::size_t>{2, 2, 2});

  const Graph h = add_edge(cycle_graph(6), 1, 4);
  const PathSystem chorded = inner_disjoint_paths(h, 1, 4, 3);
  check_path_system(h, chorded);
  CHECK(lengths(chorded) == std::vector<std::size_t>{1, 3, 3});

  CHECK_ERRC(inner_disjoint_paths(cycle_graph(5), 0, 2, 3), Errc::InsufficientPaths);
}

TEST_CASE("Menger agreement with brute force on random graphs") {
  for (int t = 0; t < 150; ++t) {
    const Graph g = support::random_graph(3 + t % 5, 0.5);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const std::size_t p = local_connectivity(g, u, v);
        CHECK(p == oracle::brute_local_connectivity(g, u, v));
        CHECK(p <= std::min(g.degree(u), g.degree(v)));
        if (p > 0) {
          const PathSystem ps = inner_disjoint_paths(g, u, v, p);
          CHECK(ps.paths.size() == p);
          check_path_system(g, ps);
        }
      }
  }
}

TEST_CASE("biconnectivity matches the definitional forms on every graph up to order 7") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& e : enumerate_graphs(n, Predicate::All)) {
      const Graph& g = e.graph;
      bool all_pairs = true;
      for (Vertex u = 0; u < n && all_pairs; ++u)
        for (Vertex v = u + 1; v < n && all_pairs; ++v) all_pairs = local_connectivity(g, u, v) >= 2;
      CHECK(is_biconnected(g) == all_pairs);
      CHECK(is_biconnected(g) == oracle::biconnected_by_deletion(g));
    }
  }
}

TEST_CASE("theta recognition examples") {
  CHECK(is_theta(complete_bipartite_graph(2, 3)));
  CHECK_FALSE(is_theta(cycle_graph(6)));
  CHECK(is_theta(add_edge(cycle_graph(5), 1, 4)));
  CHECK(theta_path_lengths(complete_bipartite_graph(2, 3)) == std::array<std::size_t, 3>{2, 2, 2});
  CHECK(theta_path_lengths(add_edge(cycle_graph(5), 1, 4)) == std::array<std::size_t, 3>{1, 2, 3});
  CHECK_FALSE(theta_path_lengths(complete_graph(4)).has_value());
}

TEST_CASE("theta shortcut matches the definitional check on every graph up to order 7") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& e : enumerate_graphs(n, Predicate::All)) {
      CHECK(is_theta(e.graph) == oracle::theta_by_definition(e.graph));
      CHECK(is_theta(e.graph) == theta_path_lengths(e.graph).has_value());
    }
}

TEST_CASE("theta path lengths are a complete invariant") {
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto specs = theta_specs(n);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const Graph g = realize(specs[i]);
      const auto l = theta_path_lengths(permuted(g, support::random_permutation(n)));
      REQUIRE(l.has_value());
      CHECK(std::vector<std::size_t>(l->begin(), l->end()) == specs[i].indices);
      for (std::size_t j = i + 1; j < specs.size(); ++j) CHECK_FALSE(is_isomorphic(g, realize(specs[j])));
    }
  }
}

TEST_CASE("hamiltonian cycle examples") {
  const auto c7 = hamiltonian_cycle(cycle_graph(7));
  REQUIRE(c7.has_value());
  CHECK(*c7 == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
  CHECK_FALSE(hamiltonian_cycle(complete_bipartite_graph(2, 3)).has_value());
  const auto diamond = hamiltonian_cycle(add_edge(cycle_graph(4), 1, 3));
  REQUIRE(diamond.has_value());
  CHECK(diamond->size() == 4);
  CHECK_ERRC(hamiltonian_cycle(cycle_graph(13)), Errc::OrderLimit);
}

TEST_CASE("hamiltonicity agrees with brute force") {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& e : enumerate_graphs(n, Predicate::Biconnected)) {
      const auto cycle = hamiltonian_cycle(e.graph);
      CHECK(cycle.has_value() == oracle::brute_hamiltonian(e.graph));
      if (!cycle) continue;
      REQUIRE(cycle->size() == n);
      std::vector<Vertex> sorted = *cycle;
      std::sort(sorted.begin(), sorted.end());
      for (Vertex v = 0; v < n; ++v) CHECK(sorted[v] == v);
      for (std::size_t i = 0; i < n; ++i) CHECK(e.graph.adjacent((*cycle)[i], (*cycle)[(i + 1) % n]));
    }
}
