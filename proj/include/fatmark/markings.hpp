#pragma once

// Abelian K-markings (K = Z^r) on fatgraphs, written additively.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fatmark/algebra.hpp"
#include "fatmark/fatgraph.hpp"
#include "fatmark/flips.hpp"
#include "fatmark/intmat.hpp"

namespace fatmark {

struct Marking {
  std::size_t rank = 0;
  std::vector<KElement> values;  // indexed by half-edge code

  const KElement& operator[](OrientedEdge h) const {
    return values[static_cast<std::size_t>(h.code())];
  }
  friend bool operator==(const Marking&, const Marking&) = default;
};

// Missing orientations are filled in by negation. Throws kInversion if both
// orientations are given and disagree, kMarkingShape if an edge has no value
// or a value has the wrong rank.
Marking make_marking(const FatGraph& g, std::size_t rank,
                     const std::vector<std::optional<KElement>>& by_code);

// Throws kMarkingShape, kInversion, kCoherence or kSurjectivity.
void check_marking(const FatGraph& g, const Marking& mu);

// Marking on the flipped graph: unchanged away from the flipped edge,
// mu(e') = mu(d) + mu(a). Throws kCoherence if mu is not coherent at the
// two endpoints of the flipped edge.
Marking propagate(const Marking& mu, const FlipContext& ctx);

// mu_g(x) = mu_h(iso(x)) for an isomorphism g -> h given on half-edge codes.
Marking pull_back(const Marking& mu_h, const std::vector<OrientedEdge>& iso);

// Post-composition with T : K -> K'.
Marking transform(const IntMatrix& t, const Marking& mu);

class SymplecticForm {
 public:
  explicit SymplecticForm(IntMatrix gram);
  // Basis ordered (A_1, B_1, ..., A_g, B_g) with A_i . B_i = 1.
  static SymplecticForm standard(std::size_t genus);

  const IntMatrix& gram() const { return gram_; }
  std::size_t dimension() const { return gram_.rows(); }
  std::int64_t pair(const KElement& x, const KElement& y) const;

 private:
  IntMatrix gram_;
};

// +1 when the boundary ranks of a, b, a-bar, b-bar occur cyclically in that
// order, -1 for a, b-bar, a-bar, b, and 0 otherwise.
int intersection_pattern(const BoundaryOrder& order, OrientedEdge a, OrientedEdge b);

// Whether mu respects homology intersection numbers along the boundary
// order. Throws kBoundaryNumber, or kRankMismatch when the rank of mu is not
// 2g or does not match the form.
bool is_topological_h(const FatGraph& g, const Marking& mu, const SymplecticForm& form);

// Classes of the half-edges in C^1(G)/(coboundaries) ~ Z^{b_1(G)}, expressed
// in the basis of non-tree edges of a breadth-first spanning tree. The map
// is the universal coherent marking: every coherent marking factors as
// mu(e) = T [e].
std::vector<KElement> edge_classes(const FatGraph& g);

// Topological H-marking together with the standard form it is topological
// for. Throws kBoundaryNumber, kGenus, or kPairing when the boundary
// pairing does not descend to a unimodular form.
std::pair<Marking, SymplecticForm> canonical_h_marking(const FatGraph& g);

}  // namespace fatmark
