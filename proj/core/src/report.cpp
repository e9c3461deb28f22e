#include "algconn/report.hpp"

#include <sstream>

#include "algconn/graph6.hpp"
#include "json.hpp"

namespace algconn {

namespace {

using Json = nlohmann::ordered_json;

Json margins_json(const Margins& m) { return Json{{"equality_filter", m.equality_filter}, {"strictness", m.strictness}}; }

Json entry_json(const VerificationEntry& e) {
  Json j;
  j["code"] = e.key;
  j["alpha"] = e.alpha;
  j["gap"] = e.equality.alpha_gap;
  j["class"] = std::string(to_string(e.equality.label));
  j["matched_spec"] = e.equality.matched_spec ? Json(to_string(*e.equality.matched_spec)) : Json(nullptr);
  j["flagged"] = e.equality.flagged;
  j["hamiltonian"] = e.hamiltonian ? Json(*e.hamiltonian) : Json(nullptr);
  j["rewire_alpha_drop"] = e.rewire_alpha_drop ? Json(*e.rewire_alpha_drop) : Json(nullptr);
  return j;
}

Json report_json(const VerificationReport& r, bool include_runtime) {
  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["graph_count"] = r.graph_count;
  j["alpha_cycle"] = r.alpha_cycle;
  j["min_alpha"] = r.min_alpha;
  j["margins"] = margins_json(r.margins);
  j["equality_classes"] = r.equality_set;
  j["expected_equality_classes"] = r.expected_equality_set;
  Json entries = Json::array();
  for (const VerificationEntry& e : r.entries) entries.push_back(entry_json(e));
  j["entries"] = std::move(entries);
  j["flagged"] = r.flagged;
  j["violations"] = r.violations;
  j["passed"] = r.passed();
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

Json path_json(const VertexPath& p) { return Json(std::vector<Vertex>(p.begin(), p.end())); }

Json certificate_object(const RewireCertificate& c) {
  Json j;
  j["v_min"] = c.v_min;
  j["v_max"] = c.v_max;
  j["p1"] = path_json(c.p1);
  j["p2"] = path_json(c.p2);
  j["cycle"] = c.cycle;
  j["cycle_spans"] = c.cycle_spans;
  Json assignments = Json::array();
  for (const PairAssignment& a : c.assignments)
    assignments.push_back(Json{{"from", a.from}, {"to", a.to}, {"inserted", a.inserted}, {"chain_holds", a.chain_holds}});
  j["assignments"] = std::move(assignments);
  j["g_prime"] = encode_graph6(c.g_prime);
  j["x"] = c.x;
  j["q_g"] = c.q_g;
  j["q_c"] = c.q_c;
  j["q_gprime"] = c.q_gprime;
  j["alpha_g"] = c.alpha_g;
  j["alpha_gprime"] = c.alpha_gprime;
  return j;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

}  // namespace

std::string to_json(const VerificationReport& report, bool include_runtime) {
  return report_json(report, include_runtime).dump(2) + "\n";
}

std::string to_json(const std::vector<VerificationReport>& reports, bool include_runtime) {
  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = reports.empty() ? std::string("t2") : reports.front().theorem;
  j["n_max"] = reports.empty() ? 0 : reports.back().n;
  bool passed = true;
  Json list = Json::array();
  for (const VerificationReport& r : reports) {
    passed = passed && r.passed();
    list.push_back(report_json(r, include_runtime));
  }
  j["reports"] = std::move(list);
  j["passed"] = passed;
  return j.dump(2) + "\n";
}

std::string fiedler_json(const Graph& g, const FiedlerResult& f) {
  Json j;
  j["schema"] = kReportSchema;
  j["n"] = g.order();
  j["m"] = g.size();
  j["alpha"] = f.alpha;
  j["multiplicity"] = f.multiplicity;
  j["fiedler_vector"] = f.vector;
  j["residual"] = f.residual;
  return j.dump(2) + "\n";
}

std::string certificate_json(const RewireCertificate& cert) {
  Json j;
  j["schema"] = kReportSchema;
  j["certificate"] = certificate_object(cert);
  return j.dump(2) + "\n";
}

std::string strictness_json(const StrictnessReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["hamiltonian"] = report.hamiltonian;
  j["alpha_drop"] = report.alpha_drop;
  Json residuals = Json::array();
  for (const EndpointResidual& r : report.endpoint_residuals)
    residuals.push_back(Json{{"vertex", r.vertex}, {"value", r.value}});
  j["endpoint_residuals"] = std::move(residuals);
  j["certificate"] = certificate_object(report.certificate);
  return j.dump(2) + "\n";
}

std::string certificate_text(const RewireCertificate& c) {
  std::ostringstream os;
  os.precision(17);
  os << "v_min: " << c.v_min << '\n'
     << "v_max: " << c.v_max << '\n'
     << "p1: " << join(c.p1) << '\n'
     << "p2: " << join(c.p2) << '\n'
     << "cycle: " << join(c.cycle) << '\n'
     << "cycle_spans: " << (c.cycle_spans ? "true" : "false") << '\n';
  for (const PairAssignment& a : c.assignments)
    os << "assignment: " << a.from << '-' << a.to << " [" << join(a.inserted) << "] chain_holds="
       << (a.chain_holds ? "true" : "false") << '\n';
  os << "g_prime: " << encode_graph6(c.g_prime) << '\n'
     << "q_g: " << c.q_g << '\n'
     << "q_c: " << c.q_c << '\n'
     << "q_gprime: " << c.q_gprime << '\n'
     << "alpha_g: " << c.alpha_g << '\n'
     << "alpha_gprime: " << c.alpha_gprime << '\n';
  return os.str();
}

}  // namespace algconn
