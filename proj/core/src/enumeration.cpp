#include "algconn/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

#include "algconn/connectivity.hpp"

namespace algconn {

std::string_view to_string(Predicate p) noexcept {
  switch (p) {
    case Predicate::All: return "all";
    case Predicate::Connected: return "connected";
    case Predicate::Biconnected: return "biconnected";
  }
  return "unknown";
}

std::optional<Predicate> parse_predicate(std::string_view text) noexcept {
  if (text == "all") return Predicate::All;
  if (text == "connected") return Predicate::Connected;
  if (text == "biconnected") return Predicate::Biconnected;
  return std::nullopt;
}

bool satisfies(const Graph& g, Predicate p) {
  switch (p) {
    case Predicate::All: return true;
    case Predicate::Connected: return is_connected(g);
    case Predicate::Biconnected: return is_biconnected(g);
  }
  return false;
}

namespace {

// Last set bit of the code, mapped back to original vertices.
Edge canonical_last_edge(const CanonicalLabeling& lab) {
  const std::size_t bits = lab.code.bit_count();
  std::size_t k = bits;
  while (k-- > 0)
    if (lab.code.bit(k)) break;
  // Position k in graph6 order is pair (i, j) with j(j-1)/2 + i = k.
  std::size_t j = 1;
  while ((j + 1) * j / 2 <= k) ++j;
  const std::size_t i = k - j * (j - 1) / 2;
  return Edge(lab.order[i], lab.order[j]);
}

class Generator {
 public:
  Generator(std::size_t n, const EnumerationOptions& options) : n_(n), options_(options) {}

  std::vector<EnumeratedGraph> children(const EnumeratedGraph& parent) const {
    const Graph& g = parent.graph;
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (!g.adjacent(u, v)) candidates.emplace_back(u, v);
    if (options_.shuffle_seed) {
      std::mt19937_64 rng(*options_.shuffle_seed ^ std::hash<CanonicalCode>{}(parent.code));
      std::shuffle(candidates.begin(), candidates.end(), rng);
    }

    std::vector<EnumeratedGraph> out;
    std::unordered_set<CanonicalCode> local;
    for (const Edge& e : candidates) {
      const Graph h = add_edge(g, e.u, e.v);
      const CanonicalLabeling lab = canonical_labeling(h);
      if (local.contains(lab.code)) continue;
      const Edge last = canonical_last_edge(lab);
      if (!(last == e) && canonical_form(remove_edge(h, last.u, last.v)) != parent.code) continue;
      local.insert(lab.code);
      out.push_back({lab.code, lab.code.to_graph()});
    }
    return out;
  }

  template <class Emit>
  void descend(const EnumeratedGraph& node, Emit& emit) const {
    emit(node);
    for (const EnumeratedGraph& child : children(node)) descend(child, emit);
  }

  EnumeratedGraph root() const {
    Graph empty(n_);
    return {canonical_form(empty), empty};
  }

 private:
  std::size_t n_;
  EnumerationOptions options_;
};

void check_order(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "enumeration needs n >= 1");
  if (n > kEnumerationMaxOrder)
    throw Error(Errc::OrderLimit, "enumeration supports n <= " + std::to_string(kEnumerationMaxOrder) + ", got " +
                                      std::to_string(n));
}

// Expands the tree breadth-first until there is enough independent work,
// then lets workers take whole subtrees. Every node passes through `emit`
// exactly once; emit must tolerate concurrent calls when jobs > 1.
template <class Emit>
void walk(std::size_t n, const EnumerationOptions& options, Emit&& emit) {
  const Generator gen(n, options);
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    gen.descend(gen.root(), emit);
    return;
  }
  std::vector<EnumeratedGraph> frontier{gen.root()};
  while (!frontier.empty() && frontier.size() < 16 * jobs) {
    std::vector<EnumeratedGraph> next;
    for (const EnumeratedGraph& node : frontier) {
      emit(node);
      for (EnumeratedGraph& c : gen.children(node)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) gen.descend(frontier[i], emit);
    });
  }
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_graphs(std::size_t n, const std::function<bool(const Graph&)>& keep,
                                              const EnumerationOptions& options) {
  check_order(n);
  std::vector<EnumeratedGraph> out;
  std::mutex mu;
  auto emit = [&](const EnumeratedGraph& node) {
    if (!keep(node.graph)) return;
    std::lock_guard lock(mu);
    out.push_back(node);
  };
  walk(n, options, emit);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
  return out;
}

std::vector<EnumeratedGraph> enumerate_graphs(std::size_t n, Predicate predicate, const EnumerationOptions& options) {
  return enumerate_graphs(n, [predicate](const Graph& g) { return satisfies(g, predicate); }, options);
}

void for_each_graph(std::size_t n, Predicate predicate, const std::function<void(const EnumeratedGraph&)>& sink,
                    const EnumerationOptions& options) {
  check_order(n);
  std::mutex mu;
  auto emit = [&](const EnumeratedGraph& node) {
    if (!satisfies(node.graph, predicate)) return;
    std::lock_guard lock(mu);
    sink(node);
  };
  walk(n, options, emit);
}

std::size_t count_classes(std::size_t n, Predicate predicate, const EnumerationOptions& options) {
  check_order(n);
  std::atomic<std::size_t> count{0};
  auto emit = [&](const EnumeratedGraph& node) {
    if (satisfies(node.graph, predicate)) ++count;
  };
  walk(n, options, emit);
  return count;
}

}  // namespace algconn
