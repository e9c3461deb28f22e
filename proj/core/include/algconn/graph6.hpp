#pragma once

#include <string>
#include <string_view>

#include "algconn/graph.hpp"

namespace algconn {

/// Largest order representable with the one-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// graph6 encoding (short form, no ">>graph6<<" header, no newline).
/// Throws Errc::UnsupportedOrder for n > 62.
std::string encode_graph6(const Graph& g);

/// Strict decoder: rejects bad lengths, characters outside '?'..'~',
/// long-form headers and nonzero padding bits (Errc::MalformedGraph6 /
/// Errc::UnsupportedOrder). Trailing newline is tolerated.
Graph decode_graph6(std::string_view text);

}  // namespace algconn
