#include "algconn/graph6.hpp"

namespace algconn {

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw Error(Errc::UnsupportedOrder, "graph6 short form supports n <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(Errc::MalformedGraph6, "empty string");
  for (char c : text) {
    if (c < 63 || c > 126)
      throw Error(Errc::MalformedGraph6, "character code " + std::to_string(static_cast<int>(c)) + " outside 63..126");
  }
  if (text.front() == 126) throw Error(Errc::UnsupportedOrder, "long-form graph6 header (n > 62) not supported");
  const std::size_t n = static_cast<std::size_t>(text.front() - 63);
  if (n == 0) throw Error(Errc::UnsupportedOrder, "graph6 order 0 is not a graph here");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() != chars + 1)
    throw Error(Errc::MalformedGraph6, "expected " + std::to_string(chars + 1) + " characters for n=" +
                                           std::to_string(n) + ", got " + std::to_string(text.size()));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = text[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw Error(Errc::MalformedGraph6, "nonzero padding bits");
  }
  return graph_from_edges(n, edges);
}

}  // namespace algconn
