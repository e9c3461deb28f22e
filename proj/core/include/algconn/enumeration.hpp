#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "algconn/canonical.hpp"
#include "algconn/graph.hpp"

namespace algconn {

inline constexpr std::size_t kEnumerationMaxOrder = 9;

enum class Predicate { All, Connected, Biconnected };

std::string_view to_string(Predicate p) noexcept;
std::optional<Predicate> parse_predicate(std::string_view text) noexcept;
bool satisfies(const Graph& g, Predicate p);

struct EnumerationOptions {
  /// Worker threads exploring disjoint subtrees of the augmentation tree.
  unsigned jobs = 1;
  /// When set, each node visits its candidate edges in a pseudo-random
  /// order derived from this seed. The emitted set does not change.
  std::optional<std::uint64_t> shuffle_seed;
};

struct EnumeratedGraph {
  CanonicalCode code;
  /// The canonical representative (code.to_graph()).
  Graph graph;
};

/// One graph per isomorphism class of order n satisfying `keep`, sorted by
/// canonical code.
///
/// Graphs are generated from the empty graph by adding one edge at a time.
/// A child H = G + e is accepted only if deleting H's canonical last edge
/// lands in G's class, and duplicates among one parent's children are
/// dropped, so every class has exactly one parent and appears once.
/// Throws Errc::OrderLimit for n > 9.
std::vector<EnumeratedGraph> enumerate_graphs(std::size_t n, const std::function<bool(const Graph&)>& keep,
                                              const EnumerationOptions& options = {});
std::vector<EnumeratedGraph> enumerate_graphs(std::size_t n, Predicate predicate,
                                              const EnumerationOptions& options = {});

/// Streams classes in generation order as they are found. With jobs > 1 the
/// sink is called from worker threads, one call at a time.
void for_each_graph(std::size_t n, Predicate predicate, const std::function<void(const EnumeratedGraph&)>& sink,
                    const EnumerationOptions& options = {});

std::size_t count_classes(std::size_t n, Predicate predicate, const EnumerationOptions& options = {});

}  // namespace algconn
