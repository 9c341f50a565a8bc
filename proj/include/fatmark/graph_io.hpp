#pragma once

// Line-oriented graph file format:
//
//   fatgraph v1
//   vertex <vid>: <h> <h> ... <h>
//   tail <h>
//   marking rank <r>
//   mark <h>: <int> ... <int>
//
// with h := <eid>+ | <eid>-, and '#' starting a comment.

#include <optional>
#include <string>
#include <string_view>

#include "fatmark/fatgraph.hpp"
#include "fatmark/markings.hpp"

namespace fatmark {

struct GraphFile {
  FatGraph graph;
  std::optional<Marking> marking;
};

// Syntax errors throw ParseError. Structural problems surface as the
// corresponding Error kinds; the axioms are left to validate() and
// check_marking().
GraphFile parse_graph(std::string_view text);

// Writes only the "+" orientation of each marked edge.
std::string print_graph(const FatGraph& g, const Marking* mu = nullptr);

// Parses "<eid>+" / "<eid>-" against the labels of g.
std::optional<OrientedEdge> parse_half_edge(const FatGraph& g, std::string_view token);

}  // namespace fatmark
