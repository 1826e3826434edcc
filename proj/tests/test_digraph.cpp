#include "irrlab/digraph.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "irrlab/errors.hpp"

using namespace irrlab;

TEST_CASE("digraph parsing") {
  Digraph d = parse_digraph(
      "# a path with a chord\n"
      "v b\n"
      "v a\n"
      "v c\n"
      "\n"
      "a b  # tree arc\n"
      "b c\n"
      "a c\n");
  CHECK(d.vertices == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(d.arcs.size() == 3);
  CHECK(d.arcs[0] == std::make_pair<std::size_t, std::size_t>(0, 1));
  CHECK(d.arcs[1] == std::make_pair<std::size_t, std::size_t>(1, 2));
  CHECK(d.arcs[2] == std::make_pair<std::size_t, std::size_t>(0, 2));
  CHECK(d.index_of("b") == 1);
  CHECK_THROWS_AS(d.index_of("z"), input_error);

  // Arcs may precede the declarations they use.
  Digraph late = parse_digraph("x y\nv y\nv x\n");
  CHECK(late.arcs.size() == 1);

  // Parallel arcs are kept.
  Digraph par = parse_digraph("v x\nv y\nx y\nx y\n");
  CHECK(par.arcs.size() == 2);
}

TEST_CASE("digraph parse diagnostics carry line numbers") {
  auto msg_of = [](const std::string& text) {
    try {
      parse_digraph(text);
    } catch (const input_error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(msg_of("v a\nv a\n") == "line 2: vertex 'a' declared more than once");
  CHECK(msg_of("v a\na b\n").substr(0, 7) == "line 2:");
  CHECK(msg_of("v a\nv b\na a\n") == "line 3: loop at vertex 'a'");
  CHECK(msg_of("v a\nv b\na b c\n").substr(0, 7) == "line 3:");
  CHECK(msg_of("v a b\n").substr(0, 7) == "line 1:");
  CHECK(msg_of("v v\n") == "line 1: 'v' is reserved and cannot name a vertex");
}

TEST_CASE("digraph formatting round trip") {
  std::string text = "v a\nv b\nv c\na b\nc a\n";
  Digraph d = parse_digraph(text);
  CHECK(format_digraph(d) == text);
  Digraph d2 = parse_digraph(format_digraph(d));
  CHECK(d2.vertices == d.vertices);
  CHECK(d2.arcs == d.arcs);
}

TEST_CASE("weak components ignore direction") {
  Digraph d = parse_digraph(
      "v a\nv b\nv c\nv d\nv e\nv f\n"
      "b a\n"
      "c a\n"
      "e d\n"
      "f e\n");
  auto comps = weak_components(d);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(comps[1] == std::vector<std::size_t>{3, 4, 5});

  Digraph lone = parse_digraph("v a\nv b\nv z\na b\n");
  auto solo = weak_components(lone);
  REQUIRE(solo.size() == 2);
  CHECK(solo[1] == std::vector<std::size_t>{2});
}
