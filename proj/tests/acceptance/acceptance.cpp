// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "algconn/connectivity.hpp"
#include "algconn/enumeration.hpp"
#include "algconn/families.hpp"
#include "algconn/graph6.hpp"
#include "algconn/report.hpp"
#include "algconn/rewiring.hpp"
#include "algconn/spectra.hpp"
#include "algconn/verify.hpp"
#include "oracles.hpp"

using namespace algconn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

Outcome spectral_oracle(std::mt19937_64& rng) {
  Outcome o;
  const auto start = Clock::now();
  double worst_cycle = 0.0;
  for (std::size_t n = 3; n <= 100; ++n) {
    const double err = std::abs(algebraic_connectivity(cycle_graph(n)) - alpha_cycle_closed_form(n));
    worst_cycle = std::max(worst_cycle, err);
    o.require(err <= 1e-10, "cycle n=" + std::to_string(n));
  }
  double worst_trace = 0.0;
  std::uniform_int_distribution<std::size_t> order(1, 30);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int t = 0; t < 500; ++t) {
    const Graph g = random_graph(order(rng), density(rng), rng);
    double sum = 0.0;
    for (double v : laplacian_spectrum(g).eigenvalues) sum += v;
    const double err = std::abs(sum - 2.0 * static_cast<double>(g.size()));
    worst_trace = std::max(worst_trace, err);
    o.require(err <= 1e-9, "trace check on random graph " + std::to_string(t));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10.0, "runtime");
  o.detail << "max cycle error " << worst_cycle << ", max trace error " << worst_trace << ", " << elapsed << " s";
  return o;
}

Outcome theorem_one_sweep() {
  Outcome o;
  // Expected class counts: n = 4..6 from labeled brute force, n = 7 from the
  // level-wise generator, n = 8 frozen after both implementations agreed.
  std::vector<std::size_t> expected(9, 0);
  for (std::size_t n = 4; n <= 6; ++n) expected[n] = oracle::labeled_class_count(n, oracle::biconnected_by_deletion);
  for (const auto& bits : oracle::levelwise_classes(7)) expected[7] += oracle::biconnected_by_deletion(oracle::from_bits(7, bits));
  expected[8] = 7123;
  o.require(expected[4] == 3 && expected[5] == 10 && expected[6] == 56, "brute-force oracle counts");

  double small_runtime = 0.0, big_runtime = 0.0;
  std::size_t flagged = 0;
  for (std::size_t n = 4; n <= 8; ++n) {
    const VerificationReport r = verify_theorem_1(n);
    (n <= 7 ? small_runtime : big_runtime) += r.runtime_seconds;
    const std::string at = "n=" + std::to_string(n);
    o.require(r.graph_count == expected[n], at + " class count " + std::to_string(r.graph_count));
    o.require(r.min_alpha >= r.alpha_cycle - 1e-10, at + " lower bound");
    std::set<std::string> got(r.equality_set.begin(), r.equality_set.end());
    std::set<std::string> want;
    for (const auto& m : equality_family_members(n)) want.insert(m.code.to_string());
    o.require(got == want, at + " equality set");
    o.require(r.violations.empty(), at + " violations");
    flagged += r.flagged.size();
    o.detail << at << ": " << r.graph_count << " classes, " << got.size() << " equality; ";
  }
  o.require(flagged == 0, "flagged cases");
  o.require(small_runtime < 60.0, "runtime n<=7");
  o.require(big_runtime < 900.0, "runtime n=8");
  o.detail << "flagged " << flagged << ", n<=7 " << small_runtime << " s, n=8 " << big_runtime << " s";
  return o;
}

Outcome theorem_two_sweep() {
  Outcome o;
  const auto start = Clock::now();
  const auto reports = verify_theorem_2(30);
  std::size_t graphs = 0;
  for (const auto& r : reports) {
    const std::string at = "n=" + std::to_string(r.n);
    graphs += r.graph_count;
    o.require(r.graph_count == oracle::theta_triples(r.n).size(), at + " triple count");
    o.require(r.min_alpha >= r.alpha_cycle - 1e-10, at + " lower bound");
    // Equality exactly on unit-branch triples realized by single chords.
    std::set<std::string> want;
    const std::vector<FamilyKind> kinds = r.n % 2 ? std::vector<FamilyKind>{FamilyKind::H1}
                                                  : std::vector<FamilyKind>{FamilyKind::H2, FamilyKind::H3};
    for (FamilyKind kind : kinds)
      for (std::size_t i = 1; i <= max_chord_index(kind, r.n); ++i) {
        const auto l = theta_path_lengths(realize({kind, r.n, {i}}));
        want.insert(to_string(FamilySpec{FamilyKind::ThetaLengths, r.n, {l->begin(), l->end()}}));
      }
    o.require(std::set<std::string>(r.equality_set.begin(), r.equality_set.end()) == want, at + " equality set");
    o.require(r.flagged.empty() && r.violations.empty(), at + " flagged or violated");
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "runtime");
  o.detail << graphs << " theta-graphs over n=4..30, " << elapsed << " s";
  return o;
}

Outcome rewiring_strictness() {
  Outcome o;
  std::size_t checked = 0, flagged = 0;
  double smallest_drop = INFINITY, worst_q = -INFINITY;
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const auto& e : enumerate_graphs(n, Predicate::Biconnected)) {
      if (hamiltonian_cycle(e.graph)) continue;
      ++checked;
      const RewireCertificate c = rewire(e.graph, fiedler_vector(e.graph));
      std::string why;
      const std::string at = encode_graph6(e.graph);
      o.require(certificate_holds(e.graph, c, &why), at + " certificate: " + why);
      o.require(c.q_gprime <= c.q_g + 1e-12, at + " quadratic forms");
      o.require(is_isomorphic(c.g_prime, cycle_graph(n)), at + " G' not a cycle");
      const double drop = c.alpha_g - c.alpha_gprime;
      flagged += !(drop > 1e-10);
      smallest_drop = std::min(smallest_drop, drop);
      worst_q = std::max(worst_q, c.q_gprime - c.q_g);
    }
  }
  o.require(flagged == 0, "flagged cases");
  o.detail << checked << " non-Hamiltonian graphs, smallest drop " << smallest_drop << ", max q_G'-q_G " << worst_q
           << ", flagged " << flagged;
  return o;
}

Outcome zero_increment(std::mt19937_64& rng) {
  Outcome o;
  double worst_increment = 0.0;
  for (std::size_t n = 5; n <= 99; ++n) {
    const std::vector<FamilyKind> kinds = n % 2 ? std::vector<FamilyKind>{FamilyKind::H1}
                                                : std::vector<FamilyKind>{FamilyKind::H2, FamilyKind::H3};
    for (FamilyKind kind : kinds) {
      if (kind == FamilyKind::H3 && n < 6) continue;
      const auto x = symmetric_cycle_eigenvector(kind, n);
      for (const Edge& e : chords(saturated_spec(kind, n))) {
        const double inc = (x[e.u] - x[e.v]) * (x[e.u] - x[e.v]);
        worst_increment = std::max(worst_increment, inc);
        o.require(inc <= 1e-24, std::string(to_string(kind)) + " n=" + std::to_string(n));
      }
    }
  }
  // Order 4 has only the single H2 chord.
  {
    const auto x = symmetric_cycle_eigenvector(FamilyKind::H2, 4);
    const double inc = (x[1] - x[3]) * (x[1] - x[3]);
    worst_increment = std::max(worst_increment, inc);
    o.require(inc <= 1e-24, "h2 n=4");
  }
  double worst_alpha = 0.0;
  std::uniform_int_distribution<std::size_t> order(4, 40);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = order(rng);
    std::vector<FamilyKind> kinds{n % 2 ? FamilyKind::H1 : FamilyKind::H2};
    if (n % 2 == 0 && n >= 6) kinds.push_back(FamilyKind::H3);
    const FamilyKind kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    FamilySpec spec{kind, n, {}};
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 1; i <= max_chord_index(kind, n); ++i)
      if (coin(rng)) spec.indices.push_back(i);
    if (spec.indices.empty()) spec.indices.push_back(1);
    const double err = std::abs(algebraic_connectivity(realize(spec)) - alpha_cycle_closed_form(n));
    worst_alpha = std::max(worst_alpha, err);
    o.require(err <= 1e-9, to_string(spec));
  }
  o.detail << "max chord increment " << worst_increment << ", max |alpha - alpha(C_n)| over 200 specs " << worst_alpha;
  return o;
}

Outcome rayleigh_property(std::mt19937_64& rng) {
  Outcome o;
  std::uniform_int_distribution<std::size_t> order(2, 20);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  std::normal_distribution<double> normal;
  double worst_slack = INFINITY, worst_fiedler = 0.0;
  for (int t = 0; t < 50; ++t) {
    Graph g(1);
    do g = random_graph(order(rng), density(rng), rng);
    while (!is_connected(g));
    const FiedlerResult f = fiedler_vector(g);
    for (int s = 0; s < 1000; ++s) {
      std::vector<double> x(g.order());
      double mean = 0.0, norm = 0.0;
      for (double& xi : x) mean += (xi = normal(rng));
      mean /= static_cast<double>(x.size());
      for (double& xi : x) {
        xi -= mean;
        norm += xi * xi;
      }
      if (norm == 0.0) continue;
      for (double& xi : x) xi /= std::sqrt(norm);
      const double slack = rayleigh_quotient(g, x) - f.alpha;
      worst_slack = std::min(worst_slack, slack);
      o.require(slack >= -1e-9, "random vector on graph " + std::to_string(t));
    }
    const double err = std::abs(rayleigh_quotient(g, f.vector) - f.alpha);
    worst_fiedler = std::max(worst_fiedler, err);
    o.require(err <= 1e-9, "Fiedler vector on graph " + std::to_string(t));
  }
  o.detail << "min R(x) - alpha " << worst_slack << ", max |R(fiedler) - alpha| " << worst_fiedler;
  return o;
}

Outcome determinism_and_round_trips() {
  Outcome o;
  const std::string a = to_json(verify_theorem_1(7), false);
  const std::string b = to_json(verify_theorem_1(7), false);
  const std::string c = to_json(verify_theorem_1(7, {}, {4, std::nullopt, false}), false);
  o.require(a == b && a == c, "t1 report bytes");
  o.require(to_csv(verify_theorem_1(6)) == to_csv(verify_theorem_1(6)), "t1 CSV bytes");
  o.require(to_json(verify_theorem_2(30), false) == to_json(verify_theorem_2(30, {}, {3, std::nullopt, false}), false),
            "t2 report bytes");
  std::size_t round_trips = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& e : enumerate_graphs(n, Predicate::All)) {
      ++round_trips;
      o.require(decode_graph6(encode_graph6(e.graph)) == e.graph, "graph6 round trip " + e.code.to_string());
    }
  o.detail << "reports identical across runs and thread counts, " << round_trips << " graph6 round trips";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240607;
  std::mt19937_64 rng(seed);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"spectral oracle agreement", [&] { return spectral_oracle(rng); }},
      {"2-connected lower bound and equality sweep (n=4..8)", theorem_one_sweep},
      {"theta-graph sweep (n=4..30)", theorem_two_sweep},
      {"rewiring strictness (n<=8)", rewiring_strictness},
      {"zero-increment equality mechanism", [&] { return zero_increment(rng); }},
      {"Rayleigh quotient lower bound", [&] { return rayleigh_property(rng); }},
      {"determinism and round trips", determinism_and_round_trips},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("AC%zu %s  %s  [%s] (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name,
                o.detail.str().c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance criteria passed (seed %llu)\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), static_cast<unsigned long long>(seed));
  return failures == 0 ? 0 : 1;
}
