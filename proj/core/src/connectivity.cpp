#include "algconn/connectivity.hpp"

#include <algorithm>
#include <deque>

namespace algconn {

bool is_valid_path_system(const Graph& g, const PathSystem& ps) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t p = 0; p < ps.paths.size(); ++p) {
    const VertexPath& path = ps.paths[p];
    if (path.size() < 2 || path.front() != ps.source || path.back() != ps.target) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= g.order()) return false;
      if (i + 1 < path.size() && (path[i] == path[i + 1] || !g.adjacent(path[i], path[i + 1]))) return false;
      if (i == 0 || i + 1 == path.size()) continue;
      if (path[i] == ps.source || path[i] == ps.target) return false;
      // A repeated inner vertex, within this path or across paths, breaks
      // simplicity or disjointness.
      if (owner[path[i]] != -1) return false;
      owner[path[i]] = static_cast<int>(p);
    }
  }
  // A direct edge may appear at most once.
  return std::count_if(ps.paths.begin(), ps.paths.end(), [](const VertexPath& p) { return p.size() == 2; }) <= 1;
}

namespace {

struct LowpointDfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<bool> cut;
  int clock = 0;

  explicit LowpointDfs(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0), cut(graph.order(), false) {}

  void visit(Vertex v, int parent) {
    disc[v] = low[v] = clock++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (disc[w] == -1) {
        ++children;
        visit(w, static_cast<int>(v));
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= disc[v]) cut[v] = true;
      } else if (static_cast<int>(w) != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) cut[v] = true;
  }
};

// Unit vertex-capacity flow network: in(v) = 2v, out(v) = 2v + 1.
class VertexSplitFlow {
 public:
  VertexSplitFlow(const Graph& g, Vertex s, Vertex t)
      : nodes_(2 * g.order()), cap_(nodes_ * nodes_, 0), source_(2 * s + 1), sink_(2 * t) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != s && v != t) cap_[idx(2 * v, 2 * v + 1)] = 1;
    for (const Edge& e : g.edges()) {
      cap_[idx(2 * e.u + 1, 2 * e.v)] = 1;
      cap_[idx(2 * e.v + 1, 2 * e.u)] = 1;
    }
    flow_.assign(nodes_ * nodes_, 0);
  }

  std::size_t run(std::size_t limit) {
    std::size_t value = 0;
    while (value < limit && augment()) ++value;
    return value;
  }

  std::vector<VertexPath> paths() const {
    std::vector<VertexPath> out;
    for (std::size_t first = 0; first < nodes_; ++first) {
      if (flow_[idx(source_, first)] <= 0) continue;
      VertexPath path{static_cast<Vertex>(source_ / 2)};
      std::size_t at = first;  // an in-node
      while (at != sink_) {
        path.push_back(static_cast<Vertex>(at / 2));
        const std::size_t out_node = at + 1;
        std::size_t next = nodes_;
        for (std::size_t w = 0; w < nodes_; ++w) {
          if (flow_[idx(out_node, w)] > 0) {
            next = w;
            break;
          }
        }
        if (next == nodes_) throw Error(Errc::Internal, "flow decomposition lost its path");
        at = next;
      }
      path.push_back(static_cast<Vertex>(sink_ / 2));
      out.push_back(std::move(path));
    }
    return out;
  }

 private:
  std::size_t idx(std::size_t a, std::size_t b) const { return a * nodes_ + b; }
  int residual(std::size_t a, std::size_t b) const { return cap_[idx(a, b)] - flow_[idx(a, b)]; }

  bool augment() {
    std::vector<std::size_t> prev(nodes_, nodes_);
    std::deque<std::size_t> queue{source_};
    prev[source_] = source_;
    while (!queue.empty() && prev[sink_] == nodes_) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < nodes_; ++b) {
        if (prev[b] == nodes_ && residual(a, b) > 0) {
          prev[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (prev[sink_] == nodes_) return false;
    for (std::size_t b = sink_; b != source_; b = prev[b]) {
      const std::size_t a = prev[b];
      ++flow_[idx(a, b)];
      --flow_[idx(b, a)];
    }
    return true;
  }

  std::size_t nodes_;
  std::vector<int> cap_, flow_;
  std::size_t source_, sink_;
};

void check_endpoints(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw Error(Errc::IndexOutOfRange, "endpoint outside vertex range");
  if (u == v) throw Error(Errc::InvalidArgument, "local connectivity needs distinct vertices");
}

}  // namespace

std::vector<Vertex> articulation_vertices(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "articulation vertices need a connected graph");
  LowpointDfs dfs(g);
  dfs.visit(0, -1);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dfs.cut[v]) out.push_back(v);
  return out;
}

bool is_biconnected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && articulation_vertices(g).empty();
}

std::size_t local_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_endpoints(g, u, v);
  VertexSplitFlow flow(g, u, v);
  return flow.run(g.order());
}

PathSystem inner_disjoint_paths(const Graph& g, Vertex u, Vertex v, std::size_t k) {
  check_endpoints(g, u, v);
  VertexSplitFlow flow(g, u, v);
  const std::size_t found = flow.run(k);
  if (found < k)
    throw Error(Errc::InsufficientPaths, "p(" + std::to_string(u) + "," + std::to_string(v) + ") = " +
                                             std::to_string(found) + " < " + std::to_string(k));
  PathSystem ps{u, v, flow.paths()};
  std::sort(ps.paths.begin(), ps.paths.end());
  return ps;
}

bool is_theta(const Graph& g) { return g.size() == g.order() + 1 && is_biconnected(g); }

std::optional<std::array<std::size_t, 3>> theta_path_lengths(const Graph& g) {
  if (!is_theta(g)) return std::nullopt;
  std::vector<Vertex> poles;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) poles.push_back(v);
  if (poles.size() != 2) throw Error(Errc::Internal, "θ-graph without exactly two branch vertices");
  std::array<std::size_t, 3> lengths{};
  const auto start = g.neighbors(poles[0]);
  for (std::size_t i = 0; i < 3; ++i) {
    Vertex prev = poles[0], cur = start[i];
    std::size_t len = 1;
    while (cur != poles[1]) {
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    lengths[i] = len;
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

namespace {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.order()), used_(n_, false) {
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      order_[v] = g.neighbors(v);
      std::stable_sort(order_[v].begin(), order_[v].end(),
                       [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    }
  }

  std::optional<std::vector<Vertex>> run() {
    path_.push_back(0);
    used_[0] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const Vertex last = path_.back();
    if (path_.size() == n_) return g_.adjacent(last, 0);
    for (Vertex w : order_[last]) {
      if (used_[w]) continue;
      used_[w] = true;
      path_.push_back(w);
      if (feasible() && extend()) return true;
      path_.pop_back();
      used_[w] = false;
    }
    return false;
  }

  // Every unvisited vertex still needs two usable neighbours (unvisited,
  // the current end, or vertex 0).
  bool feasible() const {
    const Vertex end = path_.back();
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      int usable = 0;
      for (Vertex w : order_[v])
        if (!used_[w] || w == end || w == 0) ++usable;
      if (usable < 2) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::vector<Vertex>> order_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g) {
  if (g.order() > kHamiltonianMaxOrder)
    throw Error(Errc::OrderLimit, "Hamiltonian search supports n <= " + std::to_string(kHamiltonianMaxOrder));
  if (g.order() < 3) return std::nullopt;
  return HamiltonSearch(g).run();
}

}  // namespace algconn
