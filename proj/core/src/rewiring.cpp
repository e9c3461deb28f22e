#include "algconn/rewiring.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace algconn {

std::pair<Vertex, Vertex> extreme_vertices(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::InvalidArgument, "empty vector");
  Vertex lo = 0, hi = 0;
  for (Vertex i = 1; i < x.size(); ++i) {
    if (x[i] < x[lo]) lo = i;
    if (x[i] > x[hi]) hi = i;
  }
  if (x[lo] == x[hi]) throw Error(Errc::ConstantVector, "vector has no distinct extremes");
  return {lo, hi};
}

std::vector<std::vector<Vertex>> interval_assignment(std::span<const Vertex> p1, std::span<const Vertex> offcycle,
                                                     std::span<const double> x) {
  if (p1.size() < 2) throw Error(Errc::InvalidArgument, "P1 needs at least two vertices");
  const double floor = x[p1.front()], ceiling = x[p1.back()];
  std::vector<std::vector<Vertex>> lists(p1.size() - 1);

  for (Vertex v : offcycle) {
    const double xv = x[v];
    if (xv < floor || xv > ceiling)
      throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " has x outside the P1 endpoint range");
    std::size_t slot = lists.size();
    for (std::size_t w = 0; w + 1 < p1.size() && slot == lists.size(); ++w) {
      const double a = x[p1[w]], b = x[p1[w + 1]];
      if (a == b) continue;
      if (std::min(a, b) < xv && xv <= std::max(a, b)) slot = w;
    }
    for (std::size_t w = 0; w + 1 < p1.size() && slot == lists.size(); ++w) {
      const double a = x[p1[w]], b = x[p1[w + 1]];
      if (a != b && std::min(a, b) == xv) slot = w;
    }
    if (slot == lists.size())
      throw Error(Errc::Internal, "no P1 pair accepts vertex " + std::to_string(v));
    lists[slot].push_back(v);
  }
  for (auto& list : lists)
    std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) { return x[a] != x[b] ? x[a] < x[b] : a < b; });
  return lists;
}

bool chain_inequality_check(double h, std::span<const double> mids, double q) {
  double prev = h;
  for (double l : mids) {
    if (l < prev) throw Error(Errc::OrderingViolated, "intermediate values must be ascending and >= h");
    prev = l;
  }
  if (q < prev) throw Error(Errc::OrderingViolated, "q must be >= every intermediate value");
  const double lhs = (q - h) * (q - h);
  double rhs = 0.0;
  prev = h;
  for (double l : mids) {
    rhs += (l - prev) * (l - prev);
    prev = l;
  }
  rhs += (q - prev) * (q - prev);
  return lhs + 1e-15 * lhs >= rhs;
}

namespace {

Graph cycle_through(std::size_t n, std::span<const Vertex> cycle) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return graph_from_edges(n, edges);
}

}  // namespace

RewireCertificate rewire(const Graph& g, const FiedlerResult& fiedler) {
  const std::size_t n = g.order();
  if (n < 4) throw Error(Errc::InvalidArgument, "rewiring needs n >= 4");
  if (fiedler.vector.size() != n) throw Error(Errc::InvalidArgument, "Fiedler vector length does not match graph");
  if (!is_biconnected(g)) throw Error(Errc::NotBiconnected, "rewiring needs a 2-connected graph");

  RewireCertificate cert;
  cert.x = fiedler.vector;
  const std::span<const double> x = cert.x;
  std::tie(cert.v_min, cert.v_max) = extreme_vertices(x);

  const PathSystem ps = inner_disjoint_paths(g, cert.v_min, cert.v_max, 2);
  cert.p1 = ps.paths[0];
  cert.p2 = ps.paths[1];
  cert.cycle = cert.p1;
  for (std::size_t i = cert.p2.size() - 1; i-- > 1;) cert.cycle.push_back(cert.p2[i]);
  const Graph c = cycle_through(n, cert.cycle);

  std::vector<bool> on_cycle(n, false);
  for (Vertex v : cert.cycle) on_cycle[v] = true;
  std::vector<Vertex> offcycle;
  for (Vertex v = 0; v < n; ++v)
    if (!on_cycle[v]) offcycle.push_back(v);
  cert.cycle_spans = offcycle.empty();

  const auto lists = interval_assignment(cert.p1, offcycle, x);
  std::size_t placed = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cert.cycle.size(); ++i)
    edges.emplace_back(cert.cycle[i], cert.cycle[(i + 1) % cert.cycle.size()]);

  for (std::size_t w = 0; w < lists.size(); ++w) {
    PairAssignment pa{cert.p1[w], cert.p1[w + 1], lists[w], true};
    placed += pa.inserted.size();
    if (!pa.inserted.empty()) {
      const bool forward = x[pa.from] < x[pa.to];
      const Vertex low = forward ? pa.from : pa.to;
      const Vertex high = forward ? pa.to : pa.from;
      std::vector<double> mids;
      for (Vertex v : pa.inserted) mids.push_back(x[v]);
      pa.chain_holds = chain_inequality_check(x[low], mids, x[high]);

      edges.erase(std::find(edges.begin(), edges.end(), Edge(pa.from, pa.to)));
      Vertex prev = low;
      for (Vertex v : pa.inserted) {
        edges.emplace_back(prev, v);
        prev = v;
      }
      edges.emplace_back(prev, high);
    }
    cert.assignments.push_back(std::move(pa));
  }
  if (placed != offcycle.size()) throw Error(Errc::Internal, "assignment does not partition the off-cycle vertices");

  cert.g_prime = graph_from_edges(n, edges);
  cert.q_g = quadratic_form(g, x);
  cert.q_c = quadratic_form(c, x);
  cert.q_gprime = quadratic_form(cert.g_prime, x);
  cert.alpha_g = fiedler.alpha;
  cert.alpha_gprime = algebraic_connectivity(cert.g_prime);
  return cert;
}

bool certificate_holds(const Graph& g, const RewireCertificate& cert, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t n = g.order();
  if (!is_valid_path_system(g, PathSystem{cert.v_min, cert.v_max, {cert.p1, cert.p2}}))
    return fail("P1, P2 are not inner-disjoint v_min-v_max paths");

  std::vector<int> seen(n, 0);
  for (Vertex v : cert.cycle)
    if (++seen[v] > 1) return fail("C repeats a vertex");
  for (const PairAssignment& pa : cert.assignments) {
    for (Vertex v : pa.inserted) {
      if (seen[v] != 0) return fail("an assigned vertex is on C or assigned twice");
      seen[v] = 2;
    }
    if (!pa.chain_holds) return fail("telescoping inequality failed for a P1 pair");
  }
  for (Vertex v = 0; v < n; ++v)
    if (seen[v] == 0) return fail("an off-cycle vertex was never assigned");

  const Graph& gp = cert.g_prime;
  if (gp.size() != n || !is_connected(gp)) return fail("G' is not a spanning cycle");
  for (Vertex v = 0; v < n; ++v)
    if (gp.degree(v) != 2) return fail("G' is not a spanning cycle");

  constexpr double slack = 1e-12;
  if (cert.q_c > cert.q_g + slack) return fail("q_C > q_G");
  if (cert.q_gprime > cert.q_c + slack) return fail("q_G' > q_C");
  return true;
}

StrictnessReport strictness_report(const Graph& g) {
  if (g.order() > kHamiltonianMaxOrder)
    throw Error(Errc::OrderLimit, "strictness report supports n <= " + std::to_string(kHamiltonianMaxOrder));
  if (!is_biconnected(g)) throw Error(Errc::NotBiconnected, "strictness report needs a 2-connected graph");
  StrictnessReport out;
  out.certificate = rewire(g, fiedler_vector(g));
  out.hamiltonian = hamiltonian_cycle(g).has_value();
  const RewireCertificate& cert = out.certificate;
  out.alpha_drop = cert.alpha_g - cert.alpha_gprime;

  const LaplacianMatrix lp = laplacian(cert.g_prime);
  auto residual_at = [&](Vertex v) {
    double row = 0.0;
    for (Vertex j = 0; j < g.order(); ++j) row += static_cast<double>(lp(v, j)) * cert.x[j];
    return row - cert.alpha_g * cert.x[v];
  };
  for (const PairAssignment& pa : cert.assignments) {
    if (pa.inserted.empty()) continue;
    out.endpoint_residuals.push_back({pa.from, residual_at(pa.from)});
    out.endpoint_residuals.push_back({pa.to, residual_at(pa.to)});
  }
  return out;
}

}  // namespace algconn
