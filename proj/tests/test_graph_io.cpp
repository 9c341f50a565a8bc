#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fatmark/error.hpp"
#include "support.hpp"

using namespace fmtest;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FATMARK_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_failure(const std::string& text) {
  try {
    (void)parse_graph(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("minimal tree with tail") {
  const GraphFile f = parse_graph(
      "fatgraph v1\n"
      "# a single tail edge\n"
      "vertex 0: 0-\n"
      "vertex 1: 0+\n"
      "tail 0+\n");
  CHECK(f.graph.num_edges() == 1);
  CHECK(genus(f.graph) == 0);
  CHECK(boundary_number(f.graph) == 1);
  CHECK_FALSE(f.marking.has_value());
}

TEST_CASE("shipped reference files") {
  const GraphFile f1 = parse_graph(slurp("g1.fg"));
  CHECK_NOTHROW(validate(f1.graph));
  CHECK(genus(f1.graph) == 1);
  REQUIRE(f1.marking.has_value());
  CHECK_NOTHROW(check_marking(f1.graph, *f1.marking));
  CHECK(oracle_topological(f1.graph, *f1.marking));
  CHECK(*f1.marking == canonical_h_marking(f1.graph).first);

  const GraphFile f2 = parse_graph(slurp("g2.fg"));
  CHECK_NOTHROW(validate(f2.graph));
  CHECK(genus(f2.graph) == 2);
  CHECK(f2.graph.num_vertices() == 8);
  CHECK(f2.graph.num_edges() == 11);
  REQUIRE(f2.marking.has_value());
  CHECK(oracle_topological(f2.graph, *f2.marking));
  CHECK(canonicalize(f2.graph).graph == canonicalize(g2()).graph);
}

TEST_CASE("parse errors carry positions") {
  const ParseError dup = parse_failure(
      "fatgraph v1\nvertex 0: 0-\nvertex 1: 0+ 1+ 1-\nvertex 2: 1+ 2+ 2-\ntail 0+\n");
  CHECK(dup.line() == 4);
  CHECK(dup.column() > 1);

  CHECK(parse_failure("fatgraph v2\n").line() == 1);
  CHECK(parse_failure("fatgraph v1\nvertex 0 0-\n").line() == 2);
  CHECK(parse_failure("fatgraph v1\nvertex 0: 0*\n").line() == 2);
  CHECK(parse_failure("fatgraph v1\nvertex 0: 0-\nvertex 1: 0+\ntail 0+\nmark 0+: 1\n").line() == 5);
  CHECK(parse_failure("fatgraph v1\nvertex 0: 0-\nvertex 1: 0+\ntail 0+\nbogus\n").line() == 5);
  CHECK_THROWS_AS(parse_graph("fatgraph v1\nvertex 0: 0-\nvertex 1: 0+\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("fatgraph v1\nvertex 0: 0-\nvertex 1: 0+\ntail 5+\n"), ParseError);
}

TEST_CASE("comments and spacing") {
  const GraphFile f = parse_graph(
      "  # leading comment\n"
      "fatgraph v1   # header\n"
      "\n"
      "vertex 0 : 0-\n"
      "vertex 3:3- 1- 2-\n"
      "vertex 1: 4+ 1+ 2+\n"
      "vertex 2: 0+ 3+ 4-\n"
      "tail 0+\n");
  CHECK(genus(f.graph) == 1);
  CHECK(canonicalize(f.graph).graph == canonicalize(g1()).graph);
}

TEST_CASE("half-edge tokens") {
  const FatGraph g = g2();
  const auto h = parse_half_edge(g, "17-");
  REQUIRE(h.has_value());
  CHECK(g.label(h->slot()) == 17);
  CHECK_FALSE(h->plus());
  CHECK_FALSE(parse_half_edge(g, "5+").has_value());
  CHECK_FALSE(parse_half_edge(g, "17").has_value());
  CHECK_FALSE(parse_half_edge(g, "x+").has_value());
}

TEST_CASE("print and parse round trip") {
  Rng rng(71);
  for (int t = 0; t < 40; ++t) {
    const FatGraph g = random_fatgraph(rng, 1 + static_cast<std::size_t>(t % 3), 8);
    const Marking mu = canonical_h_marking(g).first;
    const GraphFile back = parse_graph(print_graph(g, &mu));
    CHECK(canonicalize(g).graph == canonicalize(back.graph).graph);
    REQUIRE(back.marking.has_value());
    const auto iso = find_isomorphism(g, back.graph);
    REQUIRE(iso.has_value());
    CHECK(pull_back(*back.marking, *iso) == mu);
    CHECK(print_graph(back.graph, &*back.marking) == print_graph(g, &mu));
  }
}
