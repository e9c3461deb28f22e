#include <sstream>

#include "algconn/canonical.hpp"
#include "algconn/graph6.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace algconn;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "algconn");
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("graph arguments") {
  CHECK(cli::parse_graph_argument("Dhc") == cycle_graph(5));
  CHECK(cli::parse_graph_argument("5; 0-1,1-2,2-3,3-4,4-0") == cycle_graph(5));
  CHECK(cli::parse_graph_argument("cycle:5") == cycle_graph(5));
  CHECK(cli::parse_graph_argument("Dhc\n") == cycle_graph(5));
}

TEST_CASE("alpha on C6") {
  const Run r = run({"alpha", "5; 0-1,1-2,2-3,3-4,4-5,5-0"});
  CHECK(r.code == 2);  // order mismatch in the edge list
  const Run ok = run({"alpha", encode_graph6(cycle_graph(6))});
  REQUIRE(ok.code == 0);
  const Json j = Json::parse(ok.out);
  CHECK(std::abs(j["alpha"].get<double>() - 1.0) <= 1e-12);
  CHECK(j["multiplicity"] == 2);
}

TEST_CASE("families and theta commands") {
  CHECK(run({"families", "gen", "cycle:5"}).out == "Dhc\n");
  CHECK(decode_graph6(run({"families", "gen", "h1:n=5:i=1"}).out) == add_edge(cycle_graph(5), 1, 4));
  CHECK(run({"families", "gen", "h1:n=6:i=1"}).code == 2);
  const Run eq = run({"families", "equality", "--n", "6"});
  CHECK(eq.code == 0);
  CHECK(std::count(eq.out.begin(), eq.out.end(), '\n') == 4);
  const Run c5 = run({"theta", "check", "Dhc"});
  CHECK(c5.code == 0);
  CHECK(c5.out == "false\n");
  CHECK(run({"theta", "check", "theta:2,2,3"}).out == "true 2,2,3\n");
}

TEST_CASE("rewire command") {
  const Run j = run({"rewire", encode_graph6(complete_bipartite_graph(2, 3))});
  REQUIRE(j.code == 0);
  CHECK(is_isomorphic(decode_graph6(Json::parse(j.out)["certificate"]["g_prime"].get<std::string>()), cycle_graph(5)));
  const Run t = run({"rewire", "theta:2,2,2", "--format", "text"});
  CHECK(t.code == 0);
  const auto at = t.out.find("g_prime: ");
  REQUIRE(at != std::string::npos);
  CHECK(is_isomorphic(decode_graph6(t.out.substr(at + 9, 3)), cycle_graph(5)));
  CHECK(run({"rewire", "4; 0-1,1-2,2-3"}).code == 2);
}

TEST_CASE("enumerate command") {
  const Run r = run({"enumerate", "--n", "5", "--predicate", "biconnected"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);
  const Run seeded = run({"--seed", "9", "--jobs", "2", "enumerate", "--n", "5", "--predicate", "biconnected"});
  CHECK(seeded.out == r.out);
  CHECK(run({"enumerate", "--n", "5", "--predicate", "planar"}).code == 2);
  CHECK(run({"enumerate", "--n", "10"}).code == 2);
}

TEST_CASE("verify commands") {
  const Run t1 = run({"verify", "t1", "--n", "5"});
  REQUIRE(t1.code == 0);
  const Json j = Json::parse(t1.out);
  CHECK(j["graph_count"] == 10);
  CHECK(j["passed"] == true);
  const Run csv = run({"verify", "t1", "--n", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 11);
  const Run t2 = run({"--jobs", "2", "verify", "t2", "--n-max", "10"});
  CHECK(t2.code == 0);
  CHECK(Json::parse(t2.out)["reports"].size() == 7);
  // An absurd filter lets non-members look equal, which must fail the sweep.
  CHECK(run({"--tol", "10", "verify", "t1", "--n", "5"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"alpha"}).code == 2);
  CHECK(run({"alpha", "not-a-graph"}).code == 2);
  CHECK(run({"verify", "t1", "--n", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
