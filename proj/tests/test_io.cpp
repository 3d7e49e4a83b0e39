#include <sstream>

#include "doctest.h"
#include "stc/grids.hpp"
#include "stc/io.hpp"
#include "support/fixtures.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

PlaneGraph round_trip(const PlaneGraph& g) {
  std::stringstream ss;
  write_plane_graph(ss, g, "round trip");
  return read_plane_graph(ss);
}

}  // namespace

TEST_CASE("plane graph files round-trip to identical structures") {
  CHECK(round_trip(make_k3()).same_structure(make_k3()));
  CHECK(round_trip(make_p3()).same_structure(make_p3()));
  CHECK(round_trip(make_loop()).same_structure(make_loop()));
  CHECK(round_trip(make_theta()).same_structure(make_theta()));
  const TriangularGrid t6(6);
  CHECK(round_trip(t6.graph()).same_structure(t6.graph()));
  const Spiderweb web = spiderweb(3, 4);
  CHECK(round_trip(web.graph).same_structure(web.graph));
  const HexGrid hex = hexagonal_grid(2);
  CHECK(round_trip(hex.graph).same_structure(hex.graph));
}

TEST_CASE("parser rejections") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_plane_graph(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("pg 3 3\n"), ParseError);  // no outer line
  CHECK_THROWS_AS(parse("pg 1 0\nouter -1\n"), ParseError);  // missing rot
  SUBCASE("duplicate dart in rotations") {
    CHECK_THROWS_AS(
        parse("pg 3 3\nouter 1\nrot 0: 0 5 5\nrot 1: 2 1\nrot 2: 4 3\n"
              "edge 0 0 1 0 1\nedge 1 2 3 1 2\nedge 2 4 5 2 0\n"),
        InvalidRotation);
  }
  SUBCASE("dangling twin: dart never placed in an edge") {
    CHECK_THROWS_AS(
        parse("pg 3 3\nouter 1\nrot 0: 0 5\nrot 1: 2 1\nrot 2: 4 3\n"
              "edge 0 0 1 0 1\nedge 1 2 3 1 2\nedge 2 4 4 2 0\n"),
        InvalidRotation);
  }
  SUBCASE("edge listed twice") {
    CHECK_THROWS_AS(
        parse("pg 3 3\nouter 1\nrot 0: 0 5\nrot 1: 2 1\nrot 2: 4 3\n"
              "edge 0 0 1 0 1\nedge 0 2 3 1 2\nedge 2 4 5 2 0\n"),
        ParseError);
  }
  SUBCASE("comments and blank lines are fine") {
    CHECK_NOTHROW(
        parse("# a triangle\n\npg 3 3\nouter 1\nrot 0: 0 5\nrot 1: 2 1\n"
              "rot 2: 4 3\nedge 0 0 1 0 1\nedge 1 2 3 1 2\nedge 2 4 5 2 0\n"));
  }
}

TEST_CASE("tree files") {
  std::stringstream ss;
  write_tree_edges(ss, std::vector<int>{3, 1, 4});
  CHECK(read_tree_edges(ss) == std::vector<int>{3, 1, 4});
}

TEST_CASE("center-tail system files round-trip") {
  const TriangularGrid t5(5);
  const CenterTailSystem s = t5.canonical_cts();
  std::stringstream ss;
  write_cts(ss, t5.graph(), s);
  const CenterTailSystem back = read_cts(ss, t5.graph());
  CHECK(back.center == s.center);
  CHECK(back.tails == s.tails);
  CHECK(back.assignment == s.assignment);
  CHECK_NOTHROW(validate_cts(t5.graph(), back));
}

TEST_CASE("cts parser rejects malformed lines") {
  const TriangularGrid t5(5);
  auto parse = [&](const std::string& text) {
    std::istringstream in(text);
    return read_cts(in, t5.graph());
  };
  CHECK_THROWS_AS(parse("middle 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse("center 1\ntail 1: 1 O\n"), ParseError);  // index gap
  CHECK_THROWS_AS(parse("center 1\nassign 0\n"), ParseError);
}

TEST_CASE("congestion report serializes with pinned keys") {
  CongestionReport r;
  r.per_edge = {{2, 3}, {10, 5}};
  r.max_congestion = 5;
  r.argmax_edge = 10;
  const ordered_json j = to_json(r);
  CHECK(j.dump() == R"({"max":5,"argmax_edge":10,"per_edge":{"2":3,"10":5}})");
}

TEST_CASE("index tables serialize unreachable as null") {
  IndexTable t;
  t.edge = 4;
  t.value = {1, kUnreachable};
  const ordered_json j = to_json(t);
  CHECK(j.dump() == R"({"edge":4,"values":{"0":1,"1":null}})");
}
