#include "fatmark/flips.hpp"

#include <algorithm>
#include <set>

#include "fatmark/error.hpp"

namespace fatmark {

namespace {

void check_flippable(const FatGraph& g, OrientedEdge e) {
  if (e.slot() < 0 || static_cast<std::size_t>(e.slot()) >= g.num_edges()) {
    throw Error(ErrorKind::kInvalidArgument, "no such edge");
  }
  if (e.slot() == g.tail().slot()) {
    throw Error(ErrorKind::kTailFlip, "edge " + g.name(e) + " is the tail");
  }
  const std::size_t v = g.head(e);
  const std::size_t w = g.head(e.reversed());
  if (v == w) {
    throw Error(ErrorKind::kLoopFlip, "edge " + g.name(e) + " has a single endpoint");
  }
  if (g.valence(v) != 3 || g.valence(w) != 3) {
    throw Error(ErrorKind::kNotTrivalent, "edge " + g.name(e) + " has a non-trivalent endpoint");
  }
}

}  // namespace

FlipResult flip(const FatGraph& g, OrientedEdge e) {
  check_flippable(g, e);
  const OrientedEdge a = g.successor(e);
  const OrientedEdge b = g.successor(a);
  const OrientedEdge eb = e.reversed();
  const OrientedEdge c = g.successor(eb);
  const OrientedEdge d = g.successor(c);

  std::vector<Vertex> vertices(g.vertices().begin(), g.vertices().end());
  vertices[g.head(e)].inward = {e, b, c};
  vertices[g.head(eb)].inward = {eb, d, a};
  std::vector<std::int64_t> labels(g.edge_labels().begin(), g.edge_labels().end());
  return FlipResult{FatGraph(std::move(labels), std::move(vertices), g.tail()),
                    FlipContext{e, a, b, c, d, e}};
}

bool is_flippable(const FatGraph& g, int slot) {
  if (slot == g.tail().slot()) return false;
  const OrientedEdge e = OrientedEdge::of(slot, true);
  const std::size_t v = g.head(e);
  const std::size_t w = g.head(e.reversed());
  return v != w && g.valence(v) == 3 && g.valence(w) == 3;
}

std::vector<int> flippable_slots(const FatGraph& g) {
  std::vector<int> out;
  for (std::size_t s = 0; s < g.num_edges(); ++s) {
    if (is_flippable(g, static_cast<int>(s))) out.push_back(static_cast<int>(s));
  }
  return out;
}

FlipPath::FlipPath(FatGraph start) {
  correspondence_.reserve(start.num_half_edges());
  for (std::size_t code = 0; code < start.num_half_edges(); ++code) {
    correspondence_.push_back(OrientedEdge::from_code(static_cast<int>(code)));
  }
  graphs_.push_back(std::move(start));
}

void FlipPath::push(OrientedEdge e) {
  FlipResult r = flip(graphs_.back(), e);
  steps_.push_back(r.context);
  graphs_.push_back(std::move(r.graph));
  // e -> e' keeps the code, so composing with this step is the identity.
}

bool FlipPath::is_closed() const {
  if (boundary_number(start()) != 1) return false;
  return find_isomorphism(end(), start()).has_value();
}

std::vector<OrientedEdge> FlipPath::closing_isomorphism() const {
  auto iso = find_isomorphism(end(), start());
  if (!iso) throw Error(ErrorKind::kNotClosed, "end of path is not isomorphic to its start");
  return *iso;
}

FlipPath FlipPath::reversed() const {
  FlipPath out(end());
  for (std::size_t i = steps_.size(); i-- > 0;) out.push(steps_[i].e_new);
  return out;
}

FlipPath apply_path(const FatGraph& g, const std::vector<OrientedEdge>& flips) {
  FlipPath path(g);
  for (std::size_t i = 0; i < flips.size(); ++i) {
    try {
      path.push(flips[i]);
    } catch (const Error& err) {
      throw PathError(i, err.kind(), err.what());
    }
  }
  return path;
}

std::size_t shared_endpoints(const FatGraph& g, int slot1, int slot2) {
  const std::set<std::size_t> ends1{g.head(OrientedEdge::of(slot1, true)),
                                    g.head(OrientedEdge::of(slot1, false))};
  const std::set<std::size_t> ends2{g.head(OrientedEdge::of(slot2, true)),
                                    g.head(OrientedEdge::of(slot2, false))};
  std::size_t n = 0;
  for (std::size_t v : ends1) n += ends2.count(v);
  return n;
}

FlipPath pentagon_path(const FatGraph& g, OrientedEdge f, OrientedEdge h) {
  check_flippable(g, f);
  check_flippable(g, h);
  if (f.slot() == h.slot() || shared_endpoints(g, f.slot(), h.slot()) != 1) {
    throw Error(ErrorKind::kEdgeRelation, "pentagon edges " + g.name(f) + ", " + g.name(h) +
                                              " must share exactly one endpoint");
  }
  FlipPath path = apply_path(g, {f, h, f, h, f});
  if (!path.is_closed()) {
    throw Error(ErrorKind::kNotClosed, "pentagon did not close");
  }
  return path;
}

FlipPath involution_pair(const FatGraph& g, OrientedEdge e) {
  check_flippable(g, e);
  return apply_path(g, {e, e});
}

FlipPath commuting_loop(const FatGraph& g, OrientedEdge e1, OrientedEdge e2) {
  check_flippable(g, e1);
  check_flippable(g, e2);
  if (e1.slot() == e2.slot() || shared_endpoints(g, e1.slot(), e2.slot()) != 0) {
    throw Error(ErrorKind::kEdgeRelation,
                "commuting edges " + g.name(e1) + ", " + g.name(e2) + " must be disjoint");
  }
  return apply_path(g, {e1, e2, e1, e2});
}

std::vector<std::pair<int, int>> pentagon_pairs(const FatGraph& g) {
  const std::vector<int> slots = flippable_slots(g);
  std::vector<std::pair<int, int>> out;
  for (int s1 : slots) {
    for (int s2 : slots) {
      if (s1 != s2 && shared_endpoints(g, s1, s2) == 1) out.emplace_back(s1, s2);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> commuting_pairs(const FatGraph& g) {
  const std::vector<int> slots = flippable_slots(g);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      if (shared_endpoints(g, slots[i], slots[j]) == 0) out.emplace_back(slots[i], slots[j]);
    }
  }
  return out;
}

}  // namespace fatmark
