#pragma once

#include <string>
#include <vector>

#include "algconn/graph.hpp"
#include "algconn/rewiring.hpp"
#include "algconn/spectra.hpp"
#include "algconn/verify.hpp"

namespace algconn {

inline constexpr int kReportSchema = 1;

/// Pretty-printed JSON documents. Doubles use the shortest round-trip form,
/// so identical inputs give byte-identical output.
std::string to_json(const VerificationReport& report, bool include_runtime = true);
/// Sweep over several orders: {"schema", "theorem", "n_max", "reports": [...], "passed"}.
std::string to_json(const std::vector<VerificationReport>& reports, bool include_runtime = true);

std::string fiedler_json(const Graph& g, const FiedlerResult& f);
std::string certificate_json(const RewireCertificate& cert);
std::string strictness_json(const StrictnessReport& report);

/// One "field: value" line per certificate field.
std::string certificate_text(const RewireCertificate& cert);

}  // namespace algconn
