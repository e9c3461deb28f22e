#include "algconn/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <unordered_set>

namespace algconn {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::H1: return "h1";
    case FamilyKind::H2: return "h2";
    case FamilyKind::H3: return "h3";
    case FamilyKind::ThetaLengths: return "theta";
  }
  return "unknown";
}

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(Errc::InvalidFamilySpec, why); }

bool is_h_family(FamilyKind kind) {
  return kind == FamilyKind::H1 || kind == FamilyKind::H2 || kind == FamilyKind::H3;
}

}  // namespace

std::size_t max_chord_index(FamilyKind kind, std::size_t n) {
  switch (kind) {
    case FamilyKind::H1: return n >= 3 ? (n - 3) / 2 : 0;
    case FamilyKind::H2: return n >= 2 ? (n - 2) / 2 : 0;
    case FamilyKind::H3: return n >= 4 ? (n - 4) / 2 : 0;
    default: return 0;
  }
}

void validate(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case FamilyKind::Cycle:
      if (n < 3) reject("cycle needs n >= 3");
      if (!spec.indices.empty()) reject("cycle takes no indices");
      return;
    case FamilyKind::H1:
      if (n < 5 || n % 2 == 0) reject("h1 needs odd n >= 5, got n=" + std::to_string(n));
      break;
    case FamilyKind::H2:
      if (n < 4 || n % 2 == 1) reject("h2 needs even n >= 4, got n=" + std::to_string(n));
      break;
    case FamilyKind::H3:
      if (n < 6 || n % 2 == 1) reject("h3 needs even n >= 6, got n=" + std::to_string(n));
      break;
    case FamilyKind::ThetaLengths: {
      if (spec.indices.size() != 3) reject("theta needs exactly three path lengths");
      if (!std::is_sorted(spec.indices.begin(), spec.indices.end())) reject("theta lengths must be ascending");
      if (spec.indices[0] < 1) reject("theta path lengths must be >= 1");
      if (spec.indices[1] < 2) reject("theta allows at most one path of length 1");
      const std::size_t sum = spec.indices[0] + spec.indices[1] + spec.indices[2];
      if (n + 1 != sum) reject("theta order must equal l1 + l2 + l3 - 1");
      if (n < 4) reject("theta needs n >= 4");
      return;
    }
  }
  const std::size_t bound = max_chord_index(spec.kind, n);
  const std::string name(to_string(spec.kind));
  if (spec.indices.empty() || spec.indices.size() > bound)
    reject(name + " needs 1 <= k <= " + std::to_string(bound) + " indices, got " + std::to_string(spec.indices.size()));
  if (!std::is_sorted(spec.indices.begin(), spec.indices.end())) reject(name + " indices must be ascending");
  for (std::size_t i : spec.indices)
    if (i < 1 || i > bound) reject(name + " index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
}

std::vector<Edge> chords(const FamilySpec& spec) {
  validate(spec);
  std::vector<Edge> out;
  if (!is_h_family(spec.kind)) return out;
  const std::size_t shift = spec.kind == FamilyKind::H3 ? 1 : 0;
  for (std::size_t i : spec.indices) out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(spec.n - i - shift));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph realize(const FamilySpec& spec) {
  validate(spec);
  if (spec.kind == FamilyKind::ThetaLengths) {
    // Poles are 0 and l1; the paths are laid out shortest first.
    const Vertex far_pole = static_cast<Vertex>(spec.indices[0]);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < far_pole; ++v) edges.emplace_back(v, v + 1);
    Vertex next = far_pole + 1;
    for (std::size_t p = 1; p < 3; ++p) {
      Vertex prev = 0;
      for (std::size_t step = 1; step < spec.indices[p]; ++step) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, far_pole);
    }
    return graph_from_edges(spec.n, edges);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % spec.n));
  for (const Edge& c : chords(spec)) edges.push_back(c);
  return graph_from_edges(spec.n, edges);
}

FamilySpec saturated_spec(FamilyKind kind, std::size_t n) {
  FamilySpec spec{kind, n, {}};
  if (kind == FamilyKind::ThetaLengths) reject("no saturated θ-graph");
  if (is_h_family(kind))
    for (std::size_t i = 1; i <= max_chord_index(kind, n); ++i) spec.indices.push_back(i);
  validate(spec);
  return spec;
}

Graph saturated(FamilyKind kind, std::size_t n) { return realize(saturated_spec(kind, n)); }

namespace {

std::size_t parse_number(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    reject("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
  return value;
}

std::vector<std::size_t> parse_list(std::string_view s, std::string_view whole) {
  std::vector<std::size_t> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_number(s.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
    if (s.empty()) reject("trailing comma in '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) reject("expected '<kind>:...' in '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  if (kind == "cycle") {
    spec = {FamilyKind::Cycle, parse_number(rest, text), {}};
  } else if (kind == "theta") {
    spec.kind = FamilyKind::ThetaLengths;
    spec.indices = parse_list(rest, text);
    std::sort(spec.indices.begin(), spec.indices.end());
    std::size_t sum = 0;
    for (std::size_t l : spec.indices) sum += l;
    spec.n = sum > 0 ? sum - 1 : 0;
  } else if (kind == "h1" || kind == "h2" || kind == "h3") {
    spec.kind = kind == "h1" ? FamilyKind::H1 : kind == "h2" ? FamilyKind::H2 : FamilyKind::H3;
    if (!rest.starts_with("n=")) reject("expected 'n=' in '" + std::string(text) + "'");
    rest.remove_prefix(2);
    const auto sep = rest.find(":i=");
    if (sep == std::string_view::npos) reject("expected ':i=' in '" + std::string(text) + "'");
    spec.n = parse_number(rest.substr(0, sep), text);
    spec.indices = parse_list(rest.substr(sep + 3), text);
    std::sort(spec.indices.begin(), spec.indices.end());
  } else {
    reject("unknown family '" + std::string(kind) + "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(to_string(spec.kind));
  auto list = [&] {
    std::string s;
    for (std::size_t k = 0; k < spec.indices.size(); ++k) s += (k ? "," : "") + std::to_string(spec.indices[k]);
    return s;
  };
  switch (spec.kind) {
    case FamilyKind::Cycle: return out + ":" + std::to_string(spec.n);
    case FamilyKind::ThetaLengths: return out + ":" + list();
    default: return out + ":n=" + std::to_string(spec.n) + ":i=" + list();
  }
}

std::vector<FamilyMember> equality_family_members(std::size_t n) {
  if (n < 4) throw Error(Errc::InvalidArgument, "equality family needs n >= 4");
  std::vector<FamilySpec> specs{{FamilyKind::Cycle, n, {}}};
  const std::vector<FamilyKind> kinds =
      n % 2 == 1 ? std::vector<FamilyKind>{FamilyKind::H1} : std::vector<FamilyKind>{FamilyKind::H2, FamilyKind::H3};
  for (FamilyKind kind : kinds) {
    const std::size_t top = max_chord_index(kind, n);
    if (top == 0 || (kind == FamilyKind::H3 && n < 6)) continue;
    std::vector<std::vector<std::size_t>> subsets;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << top); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < top; ++i)
        if ((mask >> i) & 1u) s.push_back(i + 1);
      subsets.push_back(std::move(s));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& s : subsets) specs.push_back({kind, n, std::move(s)});
  }
  std::vector<FamilyMember> out;
  std::unordered_set<CanonicalCode> seen;
  for (FamilySpec& spec : specs) {
    Graph g = realize(spec);
    CanonicalCode code = canonical_form(g);
    if (seen.insert(code).second) out.push_back({std::move(spec), std::move(g), code});
  }
  return out;
}

std::vector<Graph> equality_family(std::size_t n) {
  std::vector<Graph> out;
  for (FamilyMember& m : equality_family_members(n)) out.push_back(std::move(m.graph));
  return out;
}

std::vector<FamilySpec> theta_specs(std::size_t n) {
  if (n < 4) throw Error(Errc::InvalidArgument, "θ-graphs need n >= 4");
  std::vector<FamilySpec> out;
  const std::size_t total = n + 1;
  for (std::size_t a = 1; 3 * a <= total; ++a)
    for (std::size_t b = std::max<std::size_t>(a, 2); a + 2 * b <= total; ++b)
      out.push_back({FamilyKind::ThetaLengths, n, {a, b, total - a - b}});
  return out;
}

std::vector<Graph> enumerate_theta(std::size_t n) {
  std::vector<Graph> out;
  for (const FamilySpec& spec : theta_specs(n)) out.push_back(realize(spec));
  return out;
}

std::vector<double> symmetric_cycle_eigenvector(FamilyKind kind, std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cycle needs n >= 3");
  const double offset = kind == FamilyKind::H3 ? 0.5 : 0.0;
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j)
    x[j] = std::cos(2.0 * std::numbers::pi * (static_cast<double>(j) + offset) / static_cast<double>(n));
  return x;
}

}  // namespace algconn
