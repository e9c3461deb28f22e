#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algconn {

enum class Errc {
  IndexOutOfRange,
  LoopEdge,
  EdgeExists,
  EdgeMissing,
  VertexSetMismatch,
  NoNewEdge,
  MalformedGraph6,
  MalformedEdgeList,
  UnsupportedOrder,
  OrderLimit,
  Disconnected,
  InvalidArgument,
  NonConvergence,
  NotBiconnected,
  InsufficientPaths,
  InvalidFamilySpec,
  ConstantVector,
  OutOfRange,
  OrderingViolated,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers can tell precondition violations apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace algconn
