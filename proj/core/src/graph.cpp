#include "algconn/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace algconn {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "index-out-of-range";
    case Errc::LoopEdge: return "loop-edge";
    case Errc::EdgeExists: return "edge-exists";
    case Errc::EdgeMissing: return "edge-missing";
    case Errc::VertexSetMismatch: return "vertex-set-mismatch";
    case Errc::NoNewEdge: return "no-new-edge";
    case Errc::MalformedGraph6: return "malformed-graph6";
    case Errc::MalformedEdgeList: return "malformed-edge-list";
    case Errc::UnsupportedOrder: return "unsupported-order";
    case Errc::OrderLimit: return "order-limit";
    case Errc::Disconnected: return "disconnected";
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::NonConvergence: return "non-convergence";
    case Errc::NotBiconnected: return "not-biconnected";
    case Errc::InsufficientPaths: return "insufficient-paths";
    case Errc::InvalidFamilySpec: return "invalid-family-spec";
    case Errc::ConstantVector: return "constant-vector";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::OrderingViolated: return "ordering-violated";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

Graph::Graph(std::size_t order) : n_(order), words_((order + 63) / 64) {
  if (order == 0) throw Error(Errc::InvalidArgument, "graph order must be at least 1");
  bits_.assign(n_ * words_, 0);
}

void Graph::set(Vertex u, Vertex v, bool on) noexcept {
  const std::uint64_t bu = std::uint64_t{1} << (u & 63);
  const std::uint64_t bv = std::uint64_t{1} << (v & 63);
  std::uint64_t& ruv = bits_[u * words_ + (v >> 6)];
  std::uint64_t& rvu = bits_[v * words_ + (u >> 6)];
  const bool was = ruv & bv;
  if (on == was) return;
  if (on) {
    ruv |= bv;
    rvu |= bu;
    ++m_;
  } else {
    ruv &= ~bv;
    rvu &= ~bu;
    --m_;
  }
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[v * words_ + w]);
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t row = bits_[v * words_ + w];
    while (row) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(row)));
      row &= row - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v) {
  if (u >= n || v >= n)
    throw Error(Errc::IndexOutOfRange, "vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") outside 0.." + std::to_string(n - 1));
  if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
}

}  // namespace

Graph graph_from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    check_pair(order, e.u, e.v);
    g.set(e.u, e.v, true);
  }
  return g;
}

Graph graph_from_edges(std::size_t order, std::initializer_list<Edge> edges) {
  return graph_from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  check_pair(g.order(), u, v);
  if (g.adjacent(u, v))
    throw Error(Errc::EdgeExists, std::to_string(u) + "-" + std::to_string(v) + " already present");
  Graph out = g;
  out.set(u, v, true);
  return out;
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  check_pair(g.order(), u, v);
  if (!g.adjacent(u, v))
    throw Error(Errc::EdgeMissing, std::to_string(u) + "-" + std::to_string(v) + " not present");
  Graph out = g;
  out.set(u, v, false);
  return out;
}

Graph add_graph(const Graph& g, const Graph& k) {
  if (k.order() != g.order())
    throw Error(Errc::VertexSetMismatch, "added graph has order " + std::to_string(k.order()) +
                                             ", base graph has order " + std::to_string(g.order()));
  Graph out = g;
  bool grew = false;
  for (const Edge& e : k.edges()) {
    if (!out.adjacent(e.u, e.v)) grew = true;
    out.set(e.u, e.v, true);
  }
  if (!grew) throw Error(Errc::NoNewEdge, "every edge of the added graph is already present");
  return out;
}

Graph permuted(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw Error(Errc::InvalidArgument, "permutation length does not match graph order");
  std::vector<bool> seen(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || seen[p]) throw Error(Errc::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.set(perm[e.u], perm[e.v], true);
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return graph_from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return graph_from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  return graph_from_edges(a + b, edges);
}

LaplacianMatrix::LaplacianMatrix(const Graph& g) : n_(g.order()), a_(n_ * n_, 0) {
  for (const Edge& e : g.edges()) {
    a_[e.u * n_ + e.v] = -1;
    a_[e.v * n_ + e.u] = -1;
    ++a_[e.u * n_ + e.u];
    ++a_[e.v * n_ + e.v];
  }
}

std::vector<double> LaplacianMatrix::to_dense() const {
  return std::vector<double>(a_.begin(), a_.end());
}

LaplacianMatrix laplacian(const Graph& g) { return LaplacianMatrix(g); }

double quadratic_form(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) throw Error(Errc::InvalidArgument, "vector length does not match graph order");
  double q = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = x[e.u] - x[e.v];
    q += d * d;
  }
  return q;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(Errc::MalformedEdgeList, "bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw Error(Errc::MalformedEdgeList, "expected 'n; u-v,...' but found no ';'");
  const std::size_t n = parse_count(text.substr(0, semi), text);
  if (n == 0) throw Error(Errc::MalformedEdgeList, "order must be at least 1");
  std::vector<Edge> edges;
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos)
      throw Error(Errc::MalformedEdgeList, "edge '" + std::string(item) + "' lacks '-'");
    const auto u = parse_count(item.substr(0, dash), text);
    const auto v = parse_count(item.substr(dash + 1), text);
    if (u >= n || v >= n)
      throw Error(Errc::IndexOutOfRange, "edge '" + std::string(item) + "' outside 0.." + std::to_string(n - 1));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return graph_from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ";";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? " " : ",") << e.u << "-" << e.v;
    first = false;
  }
  return os.str();
}

}  // namespace algconn
