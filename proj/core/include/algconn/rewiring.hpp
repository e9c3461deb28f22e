#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algconn/connectivity.hpp"
#include "algconn/graph.hpp"
#include "algconn/spectra.hpp"

namespace algconn {

/// Off-cycle vertices threaded between one consecutive pair of P1.
struct PairAssignment {
  Vertex from = 0;  ///< P1[w]
  Vertex to = 0;    ///< P1[w + 1]
  /// Ascending by x, ties by index; traversed from whichever of from/to has
  /// the smaller x-value.
  std::vector<Vertex> inserted;
  /// Telescoping inequality verified for this pair (true when empty).
  bool chain_holds = true;
};

/// Evidence for one application of the rewiring step.
///
/// C = P1 ∪ P2 is the cycle through the extreme vertices of the Fiedler
/// vector X; G' is C with every P1 edge that received off-cycle vertices
/// replaced by the threaded path, so G' is always a spanning cycle.
struct RewireCertificate {
  Vertex v_min = 0;
  Vertex v_max = 0;
  VertexPath p1, p2;
  /// v_min along P1 to v_max, then back along P2 (closing edge implied).
  std::vector<Vertex> cycle;
  /// One entry per consecutive P1 pair.
  std::vector<PairAssignment> assignments;
  /// C already visits every vertex, so G' = C.
  bool cycle_spans = false;
  Graph g_prime;
  std::vector<double> x;
  double q_g = 0.0, q_c = 0.0, q_gprime = 0.0;
  double alpha_g = 0.0, alpha_gprime = 0.0;
};

/// Indices of the smallest and largest coordinates, lowest index on ties.
/// Throws Errc::ConstantVector.
std::pair<Vertex, Vertex> extreme_vertices(std::span<const double> x);

/// Assigns each off-cycle vertex to the first non-constant P1 pair whose
/// half-open interval (low, high] contains its value; a value equal to the
/// minimum goes to the first non-constant pair whose low end has exactly
/// that value. Each list is sorted ascending by x, ties by index. Result
/// has one (possibly empty) list per consecutive pair of p1.
/// Throws Errc::OutOfRange if a value lies outside [x(p1.front()), x(p1.back())].
std::vector<std::vector<Vertex>> interval_assignment(std::span<const Vertex> p1, std::span<const Vertex> offcycle,
                                                     std::span<const double> x);

/// (q - h)^2 >= (q - l_z)^2 + (l_1 - h)^2 + sum (l_{j+1} - l_j)^2 for
/// h <= l_1 <= ... <= l_z <= q, up to 1e-15 relative.
/// Throws Errc::OrderingViolated if the inputs are not so ordered.
bool chain_inequality_check(double h, std::span<const double> mids, double q);

/// Runs the rewiring step on a biconnected graph of order >= 4 using the
/// given Fiedler vector. Throws Errc::NotBiconnected / Errc::InvalidArgument
/// on bad input, Errc::Internal if the assignment fails to partition the
/// off-cycle vertices.
RewireCertificate rewire(const Graph& g, const FiedlerResult& fiedler);

/// Re-checks every certificate invariant against g. On failure, `why`
/// (if given) names the first broken one.
bool certificate_holds(const Graph& g, const RewireCertificate& cert, std::string* why = nullptr);

/// (L(G') X)_v - alpha(G) x_v at an endpoint of a threaded path. If X were
/// also a Fiedler vector of G' with the same eigenvalue this would vanish.
struct EndpointResidual {
  Vertex vertex = 0;
  double value = 0.0;
};

struct StrictnessReport {
  bool hamiltonian = false;
  double alpha_drop = 0.0;
  RewireCertificate certificate;
  std::vector<EndpointResidual> endpoint_residuals;
};

/// Fiedler vector, rewiring and a Hamiltonicity check for a biconnected
/// graph with n <= 12.
StrictnessReport strictness_report(const Graph& g);

}  // namespace algconn
