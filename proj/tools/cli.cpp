#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "algconn/connectivity.hpp"
#include "algconn/enumeration.hpp"
#include "algconn/families.hpp"
#include "algconn/graph6.hpp"
#include "algconn/report.hpp"
#include "algconn/rewiring.hpp"
#include "algconn/spectra.hpp"
#include "algconn/verify.hpp"

namespace algconn::cli {

Graph parse_graph_argument(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
  if (text.find(';') != std::string_view::npos) return parse_edge_list(text);
  if (text.find(':') != std::string_view::npos) return realize(parse_family_spec(text));
  return decode_graph6(text);
}

namespace {

struct Settings {
  double tol = Margins{}.equality_filter;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
};

struct Commands {
  std::string graph_text;
  std::string spec_text;
  std::string format = "json";
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::string predicate = "biconnected";
  std::string checkpoint;
  bool resume = false;
};

Margins margins_from(const Settings& s) {
  Margins m;
  m.equality_filter = s.tol;
  return m;
}

int run_alpha(const Commands& c, std::ostream& out) {
  const Graph g = parse_graph_argument(c.graph_text);
  out << fiedler_json(g, fiedler_vector(g));
  return kSuccess;
}

int run_families_gen(const Commands& c, std::ostream& out) {
  out << encode_graph6(realize(parse_family_spec(c.spec_text))) << '\n';
  return kSuccess;
}

int run_families_equality(const Commands& c, std::ostream& out) {
  for (const FamilyMember& m : equality_family_members(c.n)) out << m.code.to_string() << ' ' << to_string(m.spec) << '\n';
  return kSuccess;
}

int run_theta_check(const Commands& c, std::ostream& out) {
  const auto lengths = theta_path_lengths(parse_graph_argument(c.graph_text));
  out << (lengths ? "true" : "false");
  if (lengths) out << ' ' << (*lengths)[0] << ',' << (*lengths)[1] << ',' << (*lengths)[2];
  out << '\n';
  return kSuccess;
}

int run_rewire(const Commands& c, std::ostream& out) {
  const Graph g = parse_graph_argument(c.graph_text);
  const RewireCertificate cert = rewire(g, fiedler_vector(g));
  if (c.format == "text") out << certificate_text(cert);
  else out << certificate_json(cert);
  return certificate_holds(g, cert) ? kSuccess : kVerificationFailed;
}

int run_enumerate(const Commands& c, const Settings& s, std::ostream& out) {
  const auto predicate = parse_predicate(c.predicate);
  if (!predicate) throw Error(Errc::InvalidArgument, "unknown predicate '" + c.predicate + "'");
  for (const EnumeratedGraph& e : enumerate_graphs(c.n, *predicate, EnumerationOptions{s.jobs, s.seed}))
    out << encode_graph6(e.graph) << '\n';
  return kSuccess;
}

VerifyOptions verify_options(const Commands& c, const Settings& s) {
  VerifyOptions o;
  o.jobs = s.jobs;
  if (!c.checkpoint.empty()) o.checkpoint_csv = c.checkpoint;
  o.resume = c.resume;
  return o;
}

int run_verify_t1(const Commands& c, const Settings& s, std::ostream& out) {
  const VerificationReport r = verify_theorem_1(c.n, margins_from(s), verify_options(c, s));
  if (c.format == "csv") out << to_csv(r);
  else out << to_json(r);
  return r.passed() ? kSuccess : kVerificationFailed;
}

int run_verify_t2(const Commands& c, const Settings& s, std::ostream& out) {
  const auto reports = verify_theorem_2(c.n_max, margins_from(s), verify_options(c, s));
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (c.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& r : reports)
      for (const auto& e : r.entries) out << csv_row(r, e) << '\n';
  } else {
    out << to_json(reports);
  }
  return passed ? kSuccess : kVerificationFailed;
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::NonConvergence:
    case Errc::Internal:
    case Errc::OrderingViolated:
      return false;
    default:
      return true;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic connectivity of 2-connected graphs: spectra, families, rewiring and sweeps"};
  app.require_subcommand(1);
  Settings settings;
  Commands cmd;
  app.add_option("--tol", settings.tol, "Equality filter for |alpha(G) - alpha(C_n)|")->check(CLI::PositiveNumber);
  app.add_option("--seed", settings.seed, "Seed for randomized branching order");
  app.add_option("--jobs", settings.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  auto* alpha = app.add_subcommand("alpha", "Algebraic connectivity, Fiedler vector and multiplicity as JSON");
  alpha->add_option("graph", cmd.graph_text, "graph6, edge list or family spec")->required();

  auto* families = app.add_subcommand("families", "Extremal families");
  families->require_subcommand(1);
  auto* gen = families->add_subcommand("gen", "Realize a family spec and print graph6");
  gen->add_option("spec", cmd.spec_text, "e.g. cycle:12, h1:n=9:i=1,3, theta:2,3,4")->required();
  auto* equality = families->add_subcommand("equality", "List the equality family of order n");
  equality->add_option("--n", cmd.n)->required();

  auto* theta = app.add_subcommand("theta", "Theta-graph recognition");
  theta->require_subcommand(1);
  auto* check = theta->add_subcommand("check", "Print true with path lengths, or false");
  check->add_option("graph", cmd.graph_text)->required();

  auto* rewire_cmd = app.add_subcommand("rewire", "Run the rewiring step and print its certificate");
  rewire_cmd->add_option("graph", cmd.graph_text)->required();
  rewire_cmd->add_option("--format", cmd.format)->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "Stream one graph6 line per isomorphism class");
  enumerate->add_option("--n", cmd.n)->required();
  enumerate->add_option("--predicate", cmd.predicate)->check(CLI::IsMember({"all", "connected", "biconnected"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);
  auto* t1 = verify->add_subcommand("t1", "All 2-connected graphs of order n");
  t1->add_option("--n", cmd.n)->required();
  auto* t2 = verify->add_subcommand("t2", "All theta-graphs of order 4..n-max");
  t2->add_option("--n-max", cmd.n_max)->required();
  for (auto* sub : {t1, t2}) {
    sub->add_option("--format", cmd.format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--checkpoint", cmd.checkpoint, "CSV checkpoint file");
    sub->add_flag("--resume", cmd.resume, "Skip rows already in the checkpoint");
  }

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*alpha) return run_alpha(cmd, out);
    if (*gen) return run_families_gen(cmd, out);
    if (*equality) return run_families_equality(cmd, out);
    if (*check) return run_theta_check(cmd, out);
    if (*rewire_cmd) return run_rewire(cmd, out);
    if (*enumerate) return run_enumerate(cmd, settings, out);
    if (*t1) return run_verify_t1(cmd, settings, out);
    if (*t2) return run_verify_t2(cmd, settings, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kUsageError : kVerificationFailed;
  }
  return kUsageError;
}

int dispatch(int argc, char** argv) {
  return dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace algconn::cli
