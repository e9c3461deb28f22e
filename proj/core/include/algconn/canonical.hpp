#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

/// Isomorphism testing and canonical forms are supported up to this order.
inline constexpr std::size_t kIsomorphismMaxOrder = 12;

/// Canonical adjacency bit string of a graph.
///
/// Bits follow graph6 order ((0,1), (0,2), (1,2), (0,3), ...) and are packed
/// most-significant first, so comparing the packed words compares the bit
/// strings lexicographically. Equal codes mean isomorphic graphs.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(std::size_t order, std::array<std::uint64_t, 2> words)
      : n_(static_cast<std::uint32_t>(order)), words_(words) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t bit_count() const noexcept { return std::size_t{n_} * (n_ - (n_ > 0 ? 1 : 0)) / 2; }
  bool bit(std::size_t k) const noexcept { return (words_[k / 64] >> (63 - k % 64)) & 1u; }
  const std::array<std::uint64_t, 2>& words() const noexcept { return words_; }

  /// The canonical representative as a graph.
  Graph to_graph() const;
  /// graph6 text of the canonical representative.
  std::string to_string() const;
  /// Inverse of to_string(). Throws Errc::MalformedGraph6 for strings that
  /// are valid graph6 but not in canonical form.
  static CanonicalCode from_string(std::string_view text);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::uint32_t n_ = 0;
  std::array<std::uint64_t, 2> words_{};
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;

  /// Vertex -> canonical position, suitable for permuted().
  std::vector<Vertex> positions() const;
};

/// Individualization-refinement search over equitable ordered partitions,
/// taking the minimal leaf code. Throws Errc::OrderLimit above 12 vertices.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);
/// g relabeled into canonical position order.
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace algconn

template <>
struct std::hash<algconn::CanonicalCode> {
  std::size_t operator()(const algconn::CanonicalCode& c) const noexcept {
    std::uint64_t h = c.order() * 0x9E3779B97F4A7C15ull;
    for (std::uint64_t w : c.words()) h = (h ^ w) * 0xBF58476D1CE4E5B9ull + (h >> 31);
    return static_cast<std::size_t>(h);
  }
};
