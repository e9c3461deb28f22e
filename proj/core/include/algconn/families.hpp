#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algconn/canonical.hpp"
#include "algconn/graph.hpp"

namespace algconn {

enum class FamilyKind { Cycle, H1, H2, H3, ThetaLengths };

std::string_view to_string(FamilyKind kind) noexcept;

/// Symbolic description of one of the extremal graphs.
///
/// Cycle:        C_n, no indices.
/// H1 / H2:      C_n plus chords v_i v_{n-i} for each listed i (H1: odd n,
///               H2: even n).
/// H3:           C_n plus chords v_i v_{n-i-1} (even n >= 6).
/// ThetaLengths: indices hold the three path lengths; n = sum - 1.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Cycle;
  std::size_t n = 0;
  std::vector<std::size_t> indices;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Largest chord index allowed for an H-family at order n:
/// (n-3)/2 for H1, (n-2)/2 for H2, (n-4)/2 for H3.
std::size_t max_chord_index(FamilyKind kind, std::size_t n);

/// Throws Errc::InvalidFamilySpec naming the violated bound.
void validate(const FamilySpec& spec);

/// Chord edges added to C_n (empty for Cycle and ThetaLengths); repeated
/// indices collapse.
std::vector<Edge> chords(const FamilySpec& spec);

Graph realize(const FamilySpec& spec);

/// H1, H2 or H3 with every admissible index; Cycle gives C_n.
FamilySpec saturated_spec(FamilyKind kind, std::size_t n);
Graph saturated(FamilyKind kind, std::size_t n);

/// Text forms: "cycle:12", "h1:n=9:i=1,3", "h2:n=8:i=2", "h3:n=10:i=1,2",
/// "theta:2,3,4". Throws Errc::InvalidFamilySpec.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

struct FamilyMember {
  FamilySpec spec;
  Graph graph;
  CanonicalCode code;
};

/// All graphs named by the equality clause at order n (C_n plus every
/// nonempty index subset of the H-families applicable to n's parity),
/// one per isomorphism class. The first spec producing a class is kept;
/// subsets are tried by size, then lexicographically. 4 <= n <= 12.
std::vector<FamilyMember> equality_family_members(std::size_t n);
std::vector<Graph> equality_family(std::size_t n);

/// One spec per admissible length triple l1 <= l2 <= l3 with
/// l1 + l2 + l3 = n + 1 and l2 >= 2. Throws Errc::InvalidArgument for n < 4.
std::vector<FamilySpec> theta_specs(std::size_t n);
std::vector<Graph> enumerate_theta(std::size_t n);

/// Analytic alpha-eigenvector of C_n symmetric under the chord reflection of
/// the given family: cos(2 pi j / n) for H1/H2 (j <-> n - j) and
/// cos(2 pi (j + 1/2) / n) for H3 (j <-> n - 1 - j).
std::vector<double> symmetric_cycle_eigenvector(FamilyKind kind, std::size_t n);

}  // namespace algconn
