#pragma once

// Fatgraphs with tail as combinatorial maps. Each edge occupies a slot
// s; its two orientations are the half-edges with codes 2s ("+") and
// 2s+1 ("-"). A half-edge is identified with the oriented edge pointing
// towards the vertex it is incident on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fatmark {

class OrientedEdge {
 public:
  constexpr OrientedEdge() = default;

  static constexpr OrientedEdge from_code(int code) { return OrientedEdge(code); }
  static constexpr OrientedEdge of(int slot, bool plus) {
    return OrientedEdge(2 * slot + (plus ? 0 : 1));
  }

  constexpr int code() const { return code_; }
  constexpr int slot() const { return code_ >> 1; }
  constexpr bool plus() const { return (code_ & 1) == 0; }
  constexpr OrientedEdge reversed() const { return OrientedEdge(code_ ^ 1); }

  friend constexpr auto operator<=>(OrientedEdge, OrientedEdge) = default;

 private:
  constexpr explicit OrientedEdge(int code) : code_(code) {}
  int code_ = 0;
};

struct Vertex {
  std::int64_t id = 0;
  // Inward half-edges in counterclockwise cyclic order.
  std::vector<OrientedEdge> inward;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Structurally sound rotation system: every half-edge of every slot sits
// at exactly one vertex. The fatgraph axioms proper (connectivity,
// valences, the univalent tail vertex) are checked by validate().
class FatGraph {
 public:
  FatGraph(std::vector<std::int64_t> edge_labels, std::vector<Vertex> vertices,
           OrientedEdge tail);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return labels_.size(); }
  std::size_t num_half_edges() const { return 2 * labels_.size(); }

  std::span<const Vertex> vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  std::span<const std::int64_t> edge_labels() const { return labels_; }
  std::int64_t label(int slot) const { return labels_[static_cast<std::size_t>(slot)]; }
  OrientedEdge tail() const { return tail_; }

  // Index of the vertex the half-edge points into.
  std::size_t head(OrientedEdge h) const { return head_[static_cast<std::size_t>(h.code())]; }
  std::size_t position(OrientedEdge h) const {
    return position_[static_cast<std::size_t>(h.code())];
  }
  std::size_t valence(std::size_t v) const { return vertices_[v].inward.size(); }
  OrientedEdge successor(OrientedEdge h) const;

  std::optional<OrientedEdge> find(std::int64_t label, bool plus) const;
  std::string name(OrientedEdge h) const;

  friend bool operator==(const FatGraph&, const FatGraph&) = default;

 private:
  std::vector<std::int64_t> labels_;
  std::vector<Vertex> vertices_;
  OrientedEdge tail_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> position_;
};

// Throws Error with kind kDisconnected, kMultipleUnivalent, kBadTail or
// kValence on the first violated axiom.
void validate(const FatGraph& g);
bool is_valid(const FatGraph& g);

struct BoundaryWord {
  std::vector<std::vector<OrientedEdge>> cycles;
};

// Face traversal: after entering vertex v along e, leave along the reversal
// of the cyclic successor of e at v. The tail cycle is listed first and
// starts at the tail; the others start at their minimal half-edge and are
// sorted by it.
BoundaryWord boundary_cycles(const FatGraph& g);
std::size_t boundary_number(const FatGraph& g);
std::size_t genus(const FatGraph& g);

struct BoundaryOrder {
  std::vector<OrientedEdge> sequence;  // traversal from the tail
  std::vector<std::size_t> rank;       // indexed by half-edge code
};

BoundaryOrder boundary_order(const FatGraph& g);

struct Canonical {
  FatGraph graph;
  // Indexed by half-edge code of the input; image in the canonical graph.
  std::vector<OrientedEdge> relabel;
};

// Edge labels become the boundary rank of the earlier orientation, which is
// also the "+" orientation. Vertices are numbered by their earliest
// half-edge and each rotation starts there.
Canonical canonicalize(const FatGraph& g);

// Tail-preserving isomorphism g -> h as a map on half-edge codes, if any.
// Requires boundary number 1 on both sides unless the boundary numbers differ.
std::optional<std::vector<OrientedEdge>> find_isomorphism(const FatGraph& g,
                                                          const FatGraph& h);

std::string to_string(const FatGraph& g, const BoundaryWord& w);

}  // namespace fatmark
