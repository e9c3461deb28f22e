#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "algconn/error.hpp"
#include "algconn/graph.hpp"
#include "doctest.h"

namespace support {

using algconn::Graph;
using algconn::Vertex;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240607);
  return engine;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& gen = rng()) {
  std::bernoulli_distribution coin(p);
  std::vector<algconn::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(gen)) edges.push_back({u, v});
  return algconn::graph_from_edges(n, edges);
}

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& gen = rng()) {
  while (true) {
    Graph g = random_graph(n, p, gen);
    if (algconn::is_connected(g)) return g;
  }
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& gen = rng()) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), gen);
  return perm;
}

}  // namespace support

#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const algconn::Error& e_) {                         \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());             \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected algconn::Error from " #expr); \
  } while (0)
