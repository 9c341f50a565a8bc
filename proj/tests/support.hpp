#pragma once

// Fixtures and brute-force oracles shared by the test binaries. The
// oracles work from raw rotation data and deliberately avoid the library's
// traversal helpers.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "fatmark/cocycles.hpp"
#include "fatmark/fatgraph.hpp"
#include "fatmark/flips.hpp"
#include "fatmark/graph_io.hpp"
#include "fatmark/markings.hpp"
#include "fatmark/random.hpp"

namespace fmtest {

using namespace fatmark;

inline OrientedEdge P(int slot) { return OrientedEdge::of(slot, true); }
inline OrientedEdge M(int slot) { return OrientedEdge::of(slot, false); }

// Genus-1 reference graph, edges 0..4 in slots 0..4, tail 0+.
inline FatGraph g1() {
  return FatGraph({0, 1, 2, 3, 4},
                  {{0, {M(0)}}, {1, {P(4), P(1), P(2)}}, {2, {M(3), M(1), M(2)}}, {3, {P(0), P(3), M(4)}}},
                  P(0));
}

inline FatGraph g1_with_reversed_vertex(std::size_t v) {
  const FatGraph base = g1();
  std::vector<Vertex> vs(base.vertices().begin(), base.vertices().end());
  std::reverse(vs[v].inward.begin(), vs[v].inward.end());
  return FatGraph({0, 1, 2, 3, 4}, vs, P(0));
}

// Tailed dumbbell: two loops 1 and 2 joined through a central vertex.
inline FatGraph dumbbell() {
  return FatGraph({0, 1, 2, 3, 4},
                  {{0, {M(0)}}, {1, {P(1), M(1), P(3)}}, {2, {P(2), M(2), P(4)}}, {3, {P(0), M(3), M(4)}}},
                  P(0));
}

// Genus-2 reference graph: two one-holed tori joined along edge 6.
inline FatGraph g2() {
  return parse_graph(
      "fatgraph v1\n"
      "vertex 0: 0+ 1- 17-\n"
      "vertex 1: 1+ 2- 6-\n"
      "vertex 2: 2+ 3- 4+\n"
      "vertex 3: 3+ 4- 17+\n"
      "vertex 4: 6+ 7- 11-\n"
      "vertex 5: 7+ 8- 9+\n"
      "vertex 6: 8+ 9- 11+\n"
      "vertex 7: 0-\n"
      "tail 0+\n").graph;
}

// Face permutation from raw rotations: next(h) = reverse(rotation successor of h).
inline std::vector<int> oracle_next(const FatGraph& g) {
  std::vector<int> succ(g.num_half_edges(), -1);
  for (const Vertex& v : g.vertices()) {
    for (std::size_t i = 0; i < v.inward.size(); ++i) {
      succ[static_cast<std::size_t>(v.inward[i].code())] = v.inward[(i + 1) % v.inward.size()].code();
    }
  }
  std::vector<int> next(succ.size());
  for (std::size_t h = 0; h < succ.size(); ++h) next[h] = succ[h] ^ 1;
  return next;
}

inline std::size_t oracle_boundary_number(const FatGraph& g) {
  const auto next = oracle_next(g);
  std::vector<bool> seen(next.size(), false);
  std::size_t b = 0;
  for (std::size_t h = 0; h < next.size(); ++h) {
    if (seen[h]) continue;
    ++b;
    for (int x = static_cast<int>(h); !seen[static_cast<std::size_t>(x)]; x = next[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  return b;
}

inline long oracle_genus_twice(const FatGraph& g) {
  return 2 - static_cast<long>(oracle_boundary_number(g)) - static_cast<long>(g.num_vertices()) +
         static_cast<long>(g.num_edges());
}

// Ranks along the boundary from the tail, by raw traversal.
inline std::vector<std::size_t> oracle_ranks(const FatGraph& g) {
  const auto next = oracle_next(g);
  std::vector<std::size_t> rank(next.size(), static_cast<std::size_t>(-1));
  int x = g.tail().code();
  for (std::size_t i = 0; i < next.size(); ++i) {
    rank[static_cast<std::size_t>(x)] = i;
    x = next[static_cast<std::size_t>(x)];
  }
  return rank;
}

// Based chord diagram: partner position of each boundary position. A
// complete invariant for boundary-number-one tailed fatgraphs.
inline std::vector<std::size_t> chord_diagram(const FatGraph& g) {
  const auto rank = oracle_ranks(g);
  std::vector<std::size_t> partner(rank.size());
  for (std::size_t h = 0; h < rank.size(); ++h) partner[rank[h]] = rank[h ^ 1];
  return partner;
}

// Brute-force intersection pattern from raw ranks.
inline int oracle_pattern(const std::vector<std::size_t>& rank, OrientedEdge a, OrientedEdge b) {
  const std::size_t ra = rank[static_cast<std::size_t>(a.code())];
  const std::size_t rb = rank[static_cast<std::size_t>(b.code())];
  const std::size_t rA = rank[static_cast<std::size_t>(a.reversed().code())];
  const std::size_t rB = rank[static_cast<std::size_t>(b.reversed().code())];
  if (a.slot() == b.slot()) return 0;
  // Walk the circle from a and record which of the other three comes next.
  std::vector<std::pair<std::size_t, char>> pts{{(rb + rank.size() - ra) % rank.size(), 'b'},
                                                {(rA + rank.size() - ra) % rank.size(), 'A'},
                                                {(rB + rank.size() - ra) % rank.size(), 'B'}};
  std::sort(pts.begin(), pts.end());
  const std::string order{pts[0].second, pts[1].second, pts[2].second};
  if (order == "bAB") return 1;
  if (order == "BAb") return -1;
  return 0;
}

inline std::int64_t oracle_pair(const KElement& x, const KElement& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < x.rank(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

inline bool oracle_topological(const FatGraph& g, const Marking& mu) {
  const auto rank = oracle_ranks(g);
  for (std::size_t x = 0; x < g.num_half_edges(); ++x)
    for (std::size_t y = 0; y < g.num_half_edges(); ++y) {
      const auto a = OrientedEdge::from_code(static_cast<int>(x));
      const auto b = OrientedEdge::from_code(static_cast<int>(y));
      if (oracle_pair(mu[a], mu[b]) != oracle_pattern(rank, a, b)) return false;
    }
  return true;
}

inline bool oracle_coherent(const FatGraph& g, const Marking& mu) {
  for (const Vertex& v : g.vertices()) {
    KElement s(mu.rank);
    for (OrientedEdge h : v.inward) s += mu[h];
    if (!s.is_zero()) return false;
  }
  for (std::size_t x = 0; x < mu.values.size(); x += 2) {
    if (mu.values[x] != -mu.values[x + 1]) return false;
  }
  return true;
}

inline Marking marking_from(const FatGraph& g, std::size_t rank,
                            const std::map<int, KElement>& plus_values) {
  std::vector<std::optional<KElement>> by_code(g.num_half_edges());
  for (const auto& [slot, v] : plus_values) by_code[static_cast<std::size_t>(P(slot).code())] = v;
  return make_marking(g, rank, by_code);
}

// Closed flip paths found by breadth-first search over the isomorphism
// classes reachable from g; each is root -> u -> v -> root for a flip
// u -> v off the search tree.
inline std::vector<FlipPath> closed_paths(const FatGraph& g, std::size_t want,
                                          std::size_t max_nodes = 400) {
  struct Node {
    FlipPath path;
    std::size_t parent;
    int slot;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{FlipPath(g), kRoot, -1}};
  std::map<std::vector<std::size_t>, std::size_t> index{{chord_diagram(g), 0}};
  std::vector<FlipPath> out;
  for (std::size_t i = 0; i < nodes.size() && out.size() < want; ++i) {
    for (int s : flippable_slots(nodes[i].path.end())) {
      FlipPath step = nodes[i].path;
      step.push(OrientedEdge::of(s, true));
      const auto key = chord_diagram(step.end());
      auto it = index.find(key);
      if (it == index.end()) {
        if (nodes.size() < max_nodes) {
          index[key] = nodes.size();
          nodes.push_back({step, i, s});
        }
        continue;
      }
      const std::size_t j = it->second;
      const bool tree_edge = (nodes[j].parent == i && nodes[j].slot == s) ||
                             (nodes[i].parent == j && nodes[i].slot == s);
      if (tree_edge) continue;
      out.push_back(concatenate(step, nodes[j].path.reversed()));
      if (out.size() >= want) break;
    }
  }
  return out;
}

}  // namespace fmtest
