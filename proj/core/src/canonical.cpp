#include "algconn/canonical.hpp"

#include <algorithm>
#include <bit>

#include "algconn/graph6.hpp"

namespace algconn {

Graph CanonicalCode::to_graph() const {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n_; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.emplace_back(i, j);
  return graph_from_edges(n_, edges);
}

std::string CanonicalCode::to_string() const { return encode_graph6(to_graph()); }

CanonicalCode CanonicalCode::from_string(std::string_view text) {
  const Graph g = decode_graph6(text);
  CanonicalCode code = canonical_form(g);
  if (code.to_graph() != g) throw Error(Errc::MalformedGraph6, "'" + std::string(text) + "' is not a canonical code");
  return code;
}

std::vector<Vertex> CanonicalLabeling::positions() const {
  std::vector<Vertex> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<Vertex>(i);
  return pos;
}

namespace {

constexpr std::size_t kMax = kIsomorphismMaxOrder;
using Mask = std::uint32_t;
using Words = std::array<std::uint64_t, 2>;
using Perm = std::array<std::uint8_t, kMax>;

struct Partition {
  std::array<Mask, kMax> cells{};
  std::size_t count = 0;

  void insert_after(std::size_t i, std::span<const Mask> parts) {
    // parts[0] replaces cells[i]; the rest follow it in order.
    const std::size_t extra = parts.size() - 1;
    for (std::size_t k = count; k-- > i + 1;) cells[k + extra] = cells[k];
    for (std::size_t k = 0; k < parts.size(); ++k) cells[i + k] = parts[k];
    count += extra;
  }
};

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = static_cast<Mask>(g.row_word(v));
  }

  CanonicalLabeling run() {
    Partition root;
    root.cells[0] = (Mask{1} << n_) - 1;
    root.count = 1;
    refine(root);
    std::vector<std::uint8_t> prefix;
    descend(root, prefix);

    CanonicalLabeling out;
    out.code = CanonicalCode(n_, best_code_);
    out.order.assign(best_order_.begin(), best_order_.begin() + static_cast<std::ptrdiff_t>(n_));
    return out;
  }

 private:
  // Splits cells by neighbour counts into earlier cells until the ordered
  // partition is equitable. New fragments are ordered by ascending count.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.count && !changed; ++s) {
        const Mask splitter = p.cells[s];
        for (std::size_t c = 0; c < p.count; ++c) {
          const Mask cell = p.cells[c];
          if (std::popcount(cell) < 2) continue;
          std::array<Mask, kMax + 1> by_count{};
          std::size_t lo = kMax + 1, hi = 0;
          for (Mask rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::size_t k = std::popcount(rows_[v] & splitter);
            by_count[k] |= Mask{1} << v;
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::array<Mask, kMax> parts{};
          std::size_t np = 0;
          for (std::size_t k = lo; k <= hi; ++k)
            if (by_count[k]) parts[np++] = by_count[k];
          p.insert_after(c, std::span<const Mask>(parts.data(), np));
          changed = true;
          break;
        }
      }
    }
  }

  Words leaf_code(const Perm& order) const {
    Words w{};
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      const Mask row = rows_[order[j]];
      for (std::size_t i = 0; i < j; ++i, ++k)
        if ((row >> order[i]) & 1u) w[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
    return w;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    // from[i] -> to[i] for every position i preserves adjacency.
    if (gens_.size() >= 4 * kMax) return;
    Perm gamma{};
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity &= from[i] == to[i];
    }
    if (!identity) gens_.push_back(gamma);
  }

  void visit_leaf(const Partition& p) {
    Perm order{};
    for (std::size_t i = 0; i < n_; ++i) order[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
    const Words code = leaf_code(order);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_order_ = best_order_ = order;
      return;
    }
    if (code == first_code_) record_automorphism(order, first_order_);
    if (code < best_code_) {
      best_code_ = code;
      best_order_ = order;
    } else if (code == best_code_ && code != first_code_) {
      record_automorphism(order, best_order_);
    }
  }

  // Union-find orbits of the subgroup generated by stored automorphisms
  // that fix every individualized vertex.
  std::array<std::uint8_t, kMax> orbits(const std::vector<std::uint8_t>& prefix) const {
    std::array<std::uint8_t, kMax> parent{};
    for (std::size_t v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    auto find = [&](std::uint8_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Perm& g : gens_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](std::uint8_t v) { return g[v] == v; })) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const auto a = find(static_cast<std::uint8_t>(v)), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(static_cast<std::uint8_t>(v));
    return parent;
  }

  void descend(const Partition& p, std::vector<std::uint8_t>& prefix) {
    std::size_t target = p.count;
    for (std::size_t i = 0; i < p.count; ++i) {
      if (std::popcount(p.cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == p.count) {
      visit_leaf(p);
      return;
    }
    Mask tried = 0;
    for (Mask rest = p.cells[target]; rest; rest &= rest - 1) {
      const auto v = static_cast<std::uint8_t>(std::countr_zero(rest));
      if (tried) {
        const auto orb = orbits(prefix);
        bool equivalent = false;
        for (Mask t = tried; t && !equivalent; t &= t - 1) equivalent = orb[std::countr_zero(t)] == orb[v];
        if (equivalent) continue;
      }
      tried |= Mask{1} << v;
      Partition child = p;
      const std::array<Mask, 2> parts{Mask{1} << v, p.cells[target] & ~(Mask{1} << v)};
      child.insert_after(target, parts);
      refine(child);
      prefix.push_back(v);
      descend(child, prefix);
      prefix.pop_back();
    }
  }

  std::size_t n_;
  std::array<Mask, kMax> rows_{};
  bool have_first_ = false;
  Words first_code_{}, best_code_{};
  Perm first_order_{}, best_order_{};
  std::vector<Perm> gens_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kIsomorphismMaxOrder)
    throw Error(Errc::OrderLimit, "canonical labeling supports n <= " + std::to_string(kIsomorphismMaxOrder) +
                                      ", got " + std::to_string(g.order()));
  return Search(g).run();
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace algconn
