#include "algconn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "algconn/connectivity.hpp"
#include "algconn/enumeration.hpp"
#include "algconn/rewiring.hpp"
#include "algconn/spectra.hpp"

namespace algconn {

std::string_view to_string(EqualityLabel label) noexcept {
  switch (label) {
    case EqualityLabel::Cycle: return "cycle";
    case EqualityLabel::H1: return "h1";
    case EqualityLabel::H2: return "h2";
    case EqualityLabel::H3: return "h3";
    case EqualityLabel::NotExtremal: return "not-extremal";
  }
  return "unknown";
}

std::optional<EqualityLabel> parse_equality_label(std::string_view text) noexcept {
  for (auto l : {EqualityLabel::Cycle, EqualityLabel::H1, EqualityLabel::H2, EqualityLabel::H3,
                 EqualityLabel::NotExtremal})
    if (to_string(l) == text) return l;
  return std::nullopt;
}

namespace {

EqualityLabel label_for(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::H1: return EqualityLabel::H1;
    case FamilyKind::H2: return EqualityLabel::H2;
    case FamilyKind::H3: return EqualityLabel::H3;
    default: return EqualityLabel::Cycle;
  }
}

EqualityClass decide(const std::optional<FamilySpec>& match, double gap, const Margins& margins) {
  EqualityClass out;
  out.alpha_gap = gap;
  const bool numerically_equal = std::abs(gap) <= margins.equality_filter;
  if (match) {
    out.label = label_for(match->kind);
    out.matched_spec = match;
    if (!numerically_equal) {
      out.flagged = true;
      out.flag_reason = "family member with alpha gap above the equality filter";
    }
  } else if (numerically_equal) {
    out.flagged = true;
    out.flag_reason = "alpha matches the cycle but no family member is isomorphic";
  } else if (gap <= margins.strictness) {
    out.flagged = true;
    out.flag_reason = "alpha gap inside the ambiguity band";
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(Errc::InvalidArgument, "bad number '" + std::string(s) + "' in CSV row");
  return v;
}

template <class Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = cursor++; i < count; i = cursor++) work(i);
    });
}

void finish(VerificationReport& report) {
  report.graph_count = report.entries.size();
  report.min_alpha = report.entries.empty() ? 0.0 : report.entries.front().alpha;
  for (const VerificationEntry& e : report.entries) {
    report.min_alpha = std::min(report.min_alpha, e.alpha);
    if (e.alpha < report.alpha_cycle - report.margins.strictness)
      report.violations.push_back("lower bound violated by " + e.key);
    if (e.equality.flagged) report.flagged.push_back(e.key + ": " + e.equality.flag_reason);
    else if (e.equality.label != EqualityLabel::NotExtremal) report.equality_set.push_back(e.key);
  }
  std::vector<std::string> got = report.equality_set, want = report.expected_equality_set;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::vector<std::string> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  for (const auto& k : missing) report.violations.push_back("equality class missing from sweep: " + k);
  for (const auto& k : extra) report.violations.push_back("unexpected equality class: " + k);
}

std::unordered_map<std::string, VerificationEntry> load_checkpoint(const std::filesystem::path& path) {
  std::unordered_map<std::string, VerificationEntry> rows;
  std::ifstream in(path);
  if (!in) return rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  if (line != csv_header()) throw Error(Errc::InvalidArgument, "checkpoint " + path.string() + " has a foreign header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    VerificationEntry e = parse_csv_row(line);
    rows.emplace(e.key, std::move(e));
  }
  return rows;
}

}  // namespace

EqualityClassifier::EqualityClassifier(std::size_t n, Margins margins)
    : n_(n), margins_(margins), alpha_cycle_(alpha_cycle_closed_form(n)), members_(equality_family_members(n)) {
  for (const FamilyMember& m : members_) by_code_.emplace(m.code, m.spec);
}

EqualityClass EqualityClassifier::classify(const Graph& g, double alpha) const {
  if (g.order() != n_) throw Error(Errc::InvalidArgument, "classifier order does not match graph");
  std::optional<FamilySpec> match;
  if (auto it = by_code_.find(canonical_form(g)); it != by_code_.end()) match = it->second;
  return decide(match, alpha - alpha_cycle_, margins_);
}

EqualityClass classify_equality(const Graph& g, const Margins& margins) {
  if (!is_biconnected(g)) throw Error(Errc::NotBiconnected, "classification needs a 2-connected graph");
  return EqualityClassifier(g.order(), margins).classify(g, algebraic_connectivity(g));
}

VerificationReport verify_theorem_1(std::size_t n, const Margins& margins, const VerifyOptions& options) {
  if (n < 4 || n > kEnumerationMaxOrder)
    throw Error(Errc::InvalidArgument, "2-connected sweep needs 4 <= n <= " + std::to_string(kEnumerationMaxOrder));
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.theorem = "t1";
  report.n = n;
  report.margins = margins;
  const EqualityClassifier classifier(n, margins);
  report.alpha_cycle = classifier.alpha_cycle();
  for (const FamilyMember& m : classifier.members()) report.expected_equality_set.push_back(m.code.to_string());

  const auto graphs = enumerate_graphs(n, Predicate::Biconnected, EnumerationOptions{options.jobs, std::nullopt});

  std::unordered_map<std::string, VerificationEntry> restored;
  std::ofstream sink;
  if (options.checkpoint_csv) {
    if (options.resume) restored = load_checkpoint(*options.checkpoint_csv);
    const bool fresh = restored.empty();
    sink.open(*options.checkpoint_csv, fresh ? std::ios::trunc : std::ios::app);
    if (!sink) throw Error(Errc::InvalidArgument, "cannot write checkpoint " + options.checkpoint_csv->string());
    if (fresh) sink << csv_header() << '\n';
  }

  std::vector<std::string> rewire_failures(graphs.size());
  report.entries.resize(graphs.size());
  const std::size_t chunk = 512;
  for (std::size_t begin = 0; begin < graphs.size(); begin += chunk) {
    const std::size_t end = std::min(graphs.size(), begin + chunk);
    std::vector<bool> computed(end - begin, false);
    parallel_for(end - begin, options.jobs, [&](std::size_t off) {
      const std::size_t i = begin + off;
      const Graph& g = graphs[i].graph;
      VerificationEntry& e = report.entries[i];
      e.key = graphs[i].code.to_string();
      if (auto it = restored.find(e.key); it != restored.end()) {
        e = it->second;
        return;
      }
      computed[off] = true;
      const FiedlerResult f = fiedler_vector(g);
      e.alpha = f.alpha;
      e.equality = classifier.classify(g, f.alpha);
      e.hamiltonian = hamiltonian_cycle(g).has_value();
      if (!*e.hamiltonian) {
        const RewireCertificate cert = rewire(g, f);
        e.rewire_alpha_drop = cert.alpha_g - cert.alpha_gprime;
        std::string why;
        if (!certificate_holds(g, cert, &why)) rewire_failures[i] = why;
        else if (std::abs(cert.alpha_gprime - classifier.alpha_cycle()) > 1e-10) rewire_failures[i] = "alpha(G') differs from alpha(C_n)";
      }
    });
    if (sink.is_open()) {
      for (std::size_t off = 0; off < computed.size(); ++off)
        if (computed[off]) sink << csv_row(report, report.entries[begin + off]) << '\n';
      sink.flush();
    }
  }

  finish(report);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const VerificationEntry& e = report.entries[i];
    if (!rewire_failures[i].empty()) report.violations.push_back("rewire certificate for " + e.key + ": " + rewire_failures[i]);
    if (e.rewire_alpha_drop && !(*e.rewire_alpha_drop > margins.strictness))
      report.violations.push_back("rewiring did not strictly decrease alpha for " + e.key);
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_theorem_2(std::size_t n_max, const Margins& margins, const VerifyOptions& options) {
  if (n_max < 4 || n_max > 40) throw Error(Errc::InvalidArgument, "θ-graph sweep needs 4 <= n_max <= 40");
  std::vector<VerificationReport> out;
  for (std::size_t n = 4; n <= n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = "t2";
    report.n = n;
    report.margins = margins;
    report.alpha_cycle = alpha_cycle_closed_form(n);

    // Single-chord family members, keyed by their θ path-length triple.
    std::map<std::array<std::size_t, 3>, FamilySpec> expected;
    const std::vector<FamilyKind> kinds =
        n % 2 == 1 ? std::vector<FamilyKind>{FamilyKind::H1} : std::vector<FamilyKind>{FamilyKind::H2, FamilyKind::H3};
    for (FamilyKind kind : kinds) {
      if (kind == FamilyKind::H3 && n < 6) continue;
      for (std::size_t i = 1; i <= max_chord_index(kind, n); ++i) {
        FamilySpec spec{kind, n, {i}};
        const auto triple = theta_path_lengths(realize(spec));
        if (!triple) throw Error(Errc::Internal, to_string(spec) + " is not a θ-graph");
        expected.emplace(*triple, spec);
      }
    }
    for (const auto& [triple, spec] : expected)
      report.expected_equality_set.push_back(to_string(FamilySpec{FamilyKind::ThetaLengths, n, {triple.begin(), triple.end()}}));

    const auto specs = theta_specs(n);
    report.entries.resize(specs.size());
    std::vector<std::string> rewire_failures(specs.size());
    parallel_for(specs.size(), options.jobs, [&](std::size_t i) {
      const Graph g = realize(specs[i]);
      VerificationEntry& e = report.entries[i];
      e.key = to_string(specs[i]);
      const FiedlerResult f = fiedler_vector(g);
      e.alpha = f.alpha;
      const auto triple = theta_path_lengths(g);
      std::optional<FamilySpec> match;
      if (triple)
        if (auto it = expected.find(*triple); it != expected.end()) match = it->second;
      e.equality = decide(match, f.alpha - report.alpha_cycle, margins);
      // A θ-graph is Hamiltonian exactly when one branch path is a chord.
      e.hamiltonian = specs[i].indices[0] == 1;
      if (!*e.hamiltonian) {
        const RewireCertificate cert = rewire(g, f);
        e.rewire_alpha_drop = cert.alpha_g - cert.alpha_gprime;
        std::string why;
        if (!certificate_holds(g, cert, &why)) rewire_failures[i] = why;
      }
    });
    finish(report);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const VerificationEntry& e = report.entries[i];
      if (!rewire_failures[i].empty()) report.violations.push_back("rewire certificate for " + e.key + ": " + rewire_failures[i]);
      if (e.rewire_alpha_drop && !(*e.rewire_alpha_drop > margins.strictness))
        report.violations.push_back("rewiring did not strictly decrease alpha for " + e.key);
    }
    report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(report));
  }
  return out;
}

std::string csv_header() {
  return "n,canonical_code,alpha,alpha_cycle,gap,class_label,matched_spec,hamiltonian,rewire_alpha_drop";
}

std::string csv_row(const VerificationReport& report, const VerificationEntry& e) {
  std::ostringstream os;
  os << report.n << ',' << e.key << ',' << format_double(e.alpha) << ',' << format_double(report.alpha_cycle) << ','
     << format_double(e.equality.alpha_gap) << ',' << (e.equality.flagged ? "flagged:" : "")
     << to_string(e.equality.label) << ',';
  if (e.equality.matched_spec) os << '"' << to_string(*e.equality.matched_spec) << '"';
  os << ',';
  if (e.hamiltonian) os << (*e.hamiltonian ? "true" : "false");
  os << ',';
  if (e.rewire_alpha_drop) os << format_double(*e.rewire_alpha_drop);
  return os.str();
}

std::string to_csv(const VerificationReport& report) {
  std::string out = csv_header() + "\n";
  for (const VerificationEntry& e : report.entries) out += csv_row(report, e) + "\n";
  return out;
}

VerificationEntry parse_csv_row(std::string_view line, double* alpha_cycle) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) cells.push_back(std::exchange(cur, {}));
    else cur.push_back(c);
  }
  cells.push_back(cur);
  if (cells.size() != 9) throw Error(Errc::InvalidArgument, "CSV row needs 9 columns: " + std::string(line));

  VerificationEntry e;
  e.key = cells[1];
  e.alpha = parse_double(cells[2]);
  if (alpha_cycle) *alpha_cycle = parse_double(cells[3]);
  e.equality.alpha_gap = parse_double(cells[4]);
  std::string_view label = cells[5];
  if (label.starts_with("flagged:")) {
    e.equality.flagged = true;
    e.equality.flag_reason = "restored from checkpoint";
    label.remove_prefix(8);
  }
  const auto parsed = parse_equality_label(label);
  if (!parsed) throw Error(Errc::InvalidArgument, "unknown class label '" + std::string(label) + "'");
  e.equality.label = *parsed;
  if (!cells[6].empty()) e.equality.matched_spec = parse_family_spec(cells[6]);
  if (cells[7] == "true") e.hamiltonian = true;
  else if (cells[7] == "false") e.hamiltonian = false;
  if (!cells[8].empty()) e.rewire_alpha_drop = parse_double(cells[8]);
  return e;
}

}  // namespace algconn
