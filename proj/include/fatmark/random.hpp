#pragma once

// Random generators for trivalent tailed fatgraphs with one boundary
// component, markings and unimodular matrices.

#include <cstddef>
#include <random>
#include <vector>

#include "fatmark/fatgraph.hpp"
#include "fatmark/intmat.hpp"
#include "fatmark/markings.hpp"

namespace fatmark {

using Rng = std::mt19937_64;

// Grows a trivalent tailed fatgraph of the given genus (>= 1) from a rose
// by random vertex expansions, then applies `flips` random flips and a
// random relabeling.
FatGraph random_fatgraph(Rng& rng, std::size_t genus, std::size_t flips = 0);

struct Relabeled {
  FatGraph graph;
  std::vector<OrientedEdge> map;  // half-edge code of the input -> image
};

// Random edge labels, vertex ids, slot order, edge orientations and
// rotation starting points; the result is isomorphic to g.
Relabeled random_relabel(Rng& rng, const FatGraph& g);

// Entries of moderate size, determinant +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t n);

// mu(e) = R [e] for the first `rank` rows R of a random unimodular matrix;
// coherent and surjective for 1 <= rank <= first Betti number of g.
Marking random_marking(Rng& rng, const FatGraph& g, std::size_t rank);

// Random flip on a uniformly chosen flippable edge; returns false if none.
bool random_flip_edge(Rng& rng, const FatGraph& g, OrientedEdge& out);

}  // namespace fatmark
