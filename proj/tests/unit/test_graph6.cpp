#include "algconn/enumeration.hpp"
#include "algconn/graph6.hpp"
#include "support.hpp"

using namespace algconn;

TEST_CASE("C5 encodes to the reference string") {
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  CHECK(decode_graph6("Dhc") == cycle_graph(5));
}

TEST_CASE("known encodings") {
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  const Graph star = decode_graph6("D?{");
  CHECK(star.degree(4) == 4);
  CHECK(star.size() == 4);
}

TEST_CASE("round trip on K3 and random graphs up to order 62") {
  CHECK(decode_graph6(encode_graph6(complete_graph(3))) == complete_graph(3));
  for (int t = 0; t < 300; ++t) {
    const Graph g = support::random_graph(1 + t % kGraph6MaxOrder, 0.5);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("round trip on every graph of order up to 6") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& e : enumerate_graphs(n, Predicate::All)) CHECK(decode_graph6(encode_graph6(e.graph)) == e.graph);
}

TEST_CASE("decoder tolerates header and newline") {
  CHECK(decode_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
  CHECK(decode_graph6("Dhc\n") == cycle_graph(5));
}

TEST_CASE("malformed strings are rejected") {
  CHECK_ERRC(decode_graph6("D?}"), Errc::MalformedGraph6);  // nonzero padding bits
  CHECK_ERRC(decode_graph6("Dh"), Errc::MalformedGraph6);   // too short
  CHECK_ERRC(decode_graph6("Dhcc"), Errc::MalformedGraph6); // too long
  CHECK_ERRC(decode_graph6("D h"), Errc::MalformedGraph6);  // byte below 63
  CHECK_ERRC(decode_graph6(""), Errc::MalformedGraph6);
  CHECK_ERRC(decode_graph6("?"), Errc::UnsupportedOrder);
  CHECK_ERRC(decode_graph6("~?@?"), Errc::UnsupportedOrder);
}

TEST_CASE("encoder rejects orders beyond the short form") {
  CHECK_ERRC(encode_graph6(Graph(63)), Errc::UnsupportedOrder);
}
