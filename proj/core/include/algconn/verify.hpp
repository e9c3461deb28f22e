#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "algconn/canonical.hpp"
#include "algconn/families.hpp"
#include "algconn/graph.hpp"

namespace algconn {

/// Numeric thresholds for the theorem sweeps. Equality is decided by
/// isomorphism; `equality_filter` only selects which graphs are tested.
struct Margins {
  /// |alpha(G) - alpha(C_n)| at or below this is "numerically equal".
  double equality_filter = 1e-8;
  /// Lower-bound slack, minimum NotExtremal gap and minimum rewiring drop.
  double strictness = 1e-10;
};

enum class EqualityLabel { Cycle, H1, H2, H3, NotExtremal };

std::string_view to_string(EqualityLabel label) noexcept;
std::optional<EqualityLabel> parse_equality_label(std::string_view text) noexcept;

struct EqualityClass {
  EqualityLabel label = EqualityLabel::NotExtremal;
  std::optional<FamilySpec> matched_spec;
  /// alpha(G) - alpha(C_n).
  double alpha_gap = 0.0;
  /// Numerics and structure disagree: numerically equal without a family
  /// match, or a family member whose gap exceeds the filter.
  bool flagged = false;
  std::string flag_reason;
};

/// Classifies graphs of one order against the equality family by canonical
/// code. 4 <= n <= 12.
class EqualityClassifier {
 public:
  explicit EqualityClassifier(std::size_t n, Margins margins = {});

  std::size_t order() const noexcept { return n_; }
  double alpha_cycle() const noexcept { return alpha_cycle_; }
  const std::vector<FamilyMember>& members() const noexcept { return members_; }

  EqualityClass classify(const Graph& g, double alpha) const;

 private:
  std::size_t n_;
  Margins margins_;
  double alpha_cycle_;
  std::vector<FamilyMember> members_;
  std::unordered_map<CanonicalCode, FamilySpec> by_code_;
};

/// One-shot classification of a biconnected graph (n <= 12).
EqualityClass classify_equality(const Graph& g, const Margins& margins = {});

struct VerificationEntry {
  /// Canonical code (graph6) for the 2-connected sweep; θ spec text for
  /// the θ-graph sweep.
  std::string key;
  double alpha = 0.0;
  EqualityClass equality;
  std::optional<bool> hamiltonian;
  std::optional<double> rewire_alpha_drop;
};

struct VerificationReport {
  std::string theorem;
  std::size_t n = 0;
  std::size_t graph_count = 0;
  double min_alpha = 0.0;
  double alpha_cycle = 0.0;
  Margins margins;
  std::vector<VerificationEntry> entries;
  /// Keys labelled with a family, and the keys the equality clause predicts.
  std::vector<std::string> equality_set;
  std::vector<std::string> expected_equality_set;
  std::vector<std::string> flagged;
  std::vector<std::string> violations;
  double runtime_seconds = 0.0;

  bool passed() const noexcept { return flagged.empty() && violations.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 1;
  /// Rows are appended here in canonical-code order as chunks finish.
  std::optional<std::filesystem::path> checkpoint_csv;
  /// Reuse rows already present in checkpoint_csv instead of recomputing.
  bool resume = false;
};

/// Sweeps every 2-connected graph of order n (4 <= n <= 9): the lower bound
/// alpha(G) >= alpha(C_n), exact equality set, and strict decrease of the
/// rewiring step on non-Hamiltonian graphs. Failures are recorded in the
/// report, not thrown.
VerificationReport verify_theorem_1(std::size_t n, const Margins& margins = {}, const VerifyOptions& options = {});

/// θ-graph sweep for 4 <= n <= n_max (n_max <= 40): lower bound and
/// equality exactly on the single-chord H-family members, matched by
/// θ path-length triple.
std::vector<VerificationReport> verify_theorem_2(std::size_t n_max, const Margins& margins = {},
                                                 const VerifyOptions& options = {});

/// CSV with the fixed column set
/// n,canonical_code,alpha,alpha_cycle,gap,class_label,matched_spec,hamiltonian,rewire_alpha_drop
std::string csv_header();
std::string csv_row(const VerificationReport& report, const VerificationEntry& entry);
std::string to_csv(const VerificationReport& report);
/// Inverse of csv_row for checkpoint resume. Throws Errc::InvalidArgument.
VerificationEntry parse_csv_row(std::string_view line, double* alpha_cycle = nullptr);

}  // namespace algconn
