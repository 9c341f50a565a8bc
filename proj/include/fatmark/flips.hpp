#pragma once

// Flips (Whitehead moves) on trivalent tailed fatgraphs and the relation
// loops of the Ptolemy groupoid.
//
// Labeling: if the inward cyclic order at the head of e is (e, a, b) and at
// the head of e-bar it is (e-bar, c, d), the flip produces (e', b, c) and
// (e'-bar, d, a). The new edge e' keeps the slot, label and orientation
// code of e, and both vertices keep their ids, so the edge correspondence
// of a flip is the identity on half-edge codes.

#include <cstddef>
#include <optional>
#include <vector>

#include "fatmark/fatgraph.hpp"

namespace fatmark {

struct FlipContext {
  OrientedEdge e;
  OrientedEdge a, b, c, d;
  OrientedEdge e_new;

  friend bool operator==(const FlipContext&, const FlipContext&) = default;
};

struct FlipResult {
  FatGraph graph;
  FlipContext context;
};

// Throws kTailFlip, kLoopFlip or kNotTrivalent.
FlipResult flip(const FatGraph& g, OrientedEdge e);
bool is_flippable(const FatGraph& g, int slot);
std::vector<int> flippable_slots(const FatGraph& g);

class FlipPath {
 public:
  explicit FlipPath(FatGraph start);

  const FatGraph& start() const { return graphs_.front(); }
  const FatGraph& end() const { return graphs_.back(); }
  std::size_t length() const { return steps_.size(); }
  const std::vector<FlipContext>& steps() const { return steps_; }
  // graph(i) is the graph before step i; graph(length()) == end().
  const FatGraph& graph(std::size_t i) const { return graphs_[i]; }
  // Indexed by half-edge code of start(); image in end().
  const std::vector<OrientedEdge>& correspondence() const { return correspondence_; }

  void push(OrientedEdge e);

  // Same-graph closure up to tail-preserving isomorphism.
  bool is_closed() const;
  // Isomorphism end() -> start() as a map on half-edge codes; throws
  // kNotClosed when the path is open.
  std::vector<OrientedEdge> closing_isomorphism() const;

  // Re-flips the edges in reverse order, starting from end().
  FlipPath reversed() const;

 private:
  std::vector<FatGraph> graphs_;
  std::vector<FlipContext> steps_;
  std::vector<OrientedEdge> correspondence_;
};

// Throws PathError carrying the index of the first failing step.
FlipPath apply_path(const FatGraph& g, const std::vector<OrientedEdge>& flips);

// Both edges flippable and sharing exactly one endpoint; flips f, g, f, g, f
// (the current images of the two edges, alternately).
FlipPath pentagon_path(const FatGraph& g, OrientedEdge f, OrientedEdge h);
FlipPath involution_pair(const FatGraph& g, OrientedEdge e);
// Edges without a common endpoint; flips e1, e2, e1, e2.
FlipPath commuting_loop(const FatGraph& g, OrientedEdge e1, OrientedEdge e2);

std::size_t shared_endpoints(const FatGraph& g, int slot1, int slot2);

// Ordered slot pairs admitting a pentagon, and unordered (first < second)
// slot pairs admitting a commuting square.
std::vector<std::pair<int, int>> pentagon_pairs(const FatGraph& g);
std::vector<std::pair<int, int>> commuting_pairs(const FatGraph& g);

}  // namespace fatmark
