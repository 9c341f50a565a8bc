#include "fatmark/fatgraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "fatmark/error.hpp"

namespace fatmark {

FatGraph::FatGraph(std::vector<std::int64_t> edge_labels, std::vector<Vertex> vertices,
                   OrientedEdge tail)
    : labels_(std::move(edge_labels)), vertices_(std::move(vertices)), tail_(tail) {
  std::set<std::int64_t> seen_labels;
  for (std::int64_t l : labels_) {
    if (l < 0) throw Error(ErrorKind::kInvalidArgument, "negative edge label " + std::to_string(l));
    if (!seen_labels.insert(l).second) {
      throw Error(ErrorKind::kDuplicateLabel, "edge label " + std::to_string(l) + " used twice");
    }
  }
  std::set<std::int64_t> seen_vertices;
  for (const Vertex& v : vertices_) {
    if (!seen_vertices.insert(v.id).second) {
      throw Error(ErrorKind::kDuplicateLabel, "vertex id " + std::to_string(v.id) + " used twice");
    }
  }

  const std::size_t n = num_half_edges();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  head_.assign(n, kUnset);
  position_.assign(n, kUnset);
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    const auto& inward = vertices_[vi].inward;
    for (std::size_t p = 0; p < inward.size(); ++p) {
      const int code = inward[p].code();
      if (code < 0 || static_cast<std::size_t>(code) >= n) {
        throw Error(ErrorKind::kInvalidArgument, "half-edge outside the edge set");
      }
      if (head_[static_cast<std::size_t>(code)] != kUnset) {
        throw Error(ErrorKind::kDuplicateHalfEdge,
                    "half-edge " + name(inward[p]) + " appears twice");
      }
      head_[static_cast<std::size_t>(code)] = vi;
      position_[static_cast<std::size_t>(code)] = p;
    }
  }
  for (std::size_t code = 0; code < n; ++code) {
    if (head_[code] == kUnset) {
      throw Error(ErrorKind::kMissingHalfEdge,
                  "half-edge " + name(OrientedEdge::from_code(static_cast<int>(code))) +
                      " is not incident on any vertex");
    }
  }
  if (tail_.code() < 0 || static_cast<std::size_t>(tail_.code()) >= n) {
    throw Error(ErrorKind::kBadTail, "tail is not a half-edge of the graph");
  }
}

OrientedEdge FatGraph::successor(OrientedEdge h) const {
  const auto& inward = vertices_[head(h)].inward;
  return inward[(position(h) + 1) % inward.size()];
}

std::optional<OrientedEdge> FatGraph::find(std::int64_t label, bool plus) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return OrientedEdge::of(static_cast<int>(it - labels_.begin()), plus);
}

std::string FatGraph::name(OrientedEdge h) const {
  const auto slot = static_cast<std::size_t>(h.slot());
  std::string base = slot < labels_.size() ? std::to_string(labels_[slot]) : "?";
  return base + (h.plus() ? "+" : "-");
}

void validate(const FatGraph& g) {
  std::size_t univalent = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) == 1) ++univalent;
  }
  if (univalent > 1) {
    throw Error(ErrorKind::kMultipleUnivalent,
                std::to_string(univalent) + " univalent vertices");
  }
  if (univalent == 0) throw Error(ErrorKind::kBadTail, "no univalent vertex");
  const std::size_t tail_vertex = g.head(g.tail().reversed());
  if (g.valence(tail_vertex) != 1) {
    throw Error(ErrorKind::kBadTail,
                "tail " + g.name(g.tail()) + " does not leave the univalent vertex");
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) != 1 && g.valence(v) < 3) {
      throw Error(ErrorKind::kValence, "vertex " + std::to_string(g.vertex(v).id) +
                                           " has valence " + std::to_string(g.valence(v)));
    }
  }
  std::vector<bool> reached(g.num_vertices(), false);
  std::queue<std::size_t> todo;
  reached[0] = true;
  todo.push(0);
  std::size_t count = 1;
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    for (OrientedEdge h : g.vertex(v).inward) {
      const std::size_t w = g.head(h.reversed());
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        todo.push(w);
      }
    }
  }
  if (count != g.num_vertices()) {
    throw Error(ErrorKind::kDisconnected, "graph has more than one component");
  }
}

bool is_valid(const FatGraph& g) {
  try {
    validate(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Ordering used for "minimal oriented edge": by label, "+" before "-".
bool label_less(const FatGraph& g, OrientedEdge a, OrientedEdge b) {
  const auto ka = std::make_pair(g.label(a.slot()), a.plus() ? 0 : 1);
  const auto kb = std::make_pair(g.label(b.slot()), b.plus() ? 0 : 1);
  return ka < kb;
}

std::vector<OrientedEdge> trace_cycle(const FatGraph& g, OrientedEdge start,
                                      std::vector<bool>& visited) {
  std::vector<OrientedEdge> cycle;
  OrientedEdge h = start;
  do {
    visited[static_cast<std::size_t>(h.code())] = true;
    cycle.push_back(h);
    h = g.successor(h).reversed();
  } while (h != start);
  return cycle;
}

}  // namespace

BoundaryWord boundary_cycles(const FatGraph& g) {
  BoundaryWord out;
  std::vector<bool> visited(g.num_half_edges(), false);
  out.cycles.push_back(trace_cycle(g, g.tail(), visited));
  std::vector<std::vector<OrientedEdge>> rest;
  for (std::size_t code = 0; code < g.num_half_edges(); ++code) {
    if (visited[code]) continue;
    auto cycle = trace_cycle(g, OrientedEdge::from_code(static_cast<int>(code)), visited);
    auto min_it = std::min_element(cycle.begin(), cycle.end(), [&](OrientedEdge a, OrientedEdge b) {
      return label_less(g, a, b);
    });
    std::rotate(cycle.begin(), min_it, cycle.end());
    rest.push_back(std::move(cycle));
  }
  std::sort(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
    return label_less(g, a.front(), b.front());
  });
  for (auto& c : rest) out.cycles.push_back(std::move(c));
  return out;
}

std::size_t boundary_number(const FatGraph& g) {
  std::vector<bool> visited(g.num_half_edges(), false);
  std::size_t b = 0;
  for (std::size_t code = 0; code < g.num_half_edges(); ++code) {
    if (visited[code]) continue;
    trace_cycle(g, OrientedEdge::from_code(static_cast<int>(code)), visited);
    ++b;
  }
  return b;
}

std::size_t genus(const FatGraph& g) {
  const auto b = static_cast<std::int64_t>(boundary_number(g));
  const auto v = static_cast<std::int64_t>(g.num_vertices());
  const auto e = static_cast<std::int64_t>(g.num_edges());
  const std::int64_t twice = 2 - b - v + e;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::kCorruptTopology,
                "2 - b - V + E = " + std::to_string(twice) + " is not a non-negative even number");
  }
  return static_cast<std::size_t>(twice / 2);
}

BoundaryOrder boundary_order(const FatGraph& g) {
  std::vector<bool> visited(g.num_half_edges(), false);
  BoundaryOrder out;
  out.sequence = trace_cycle(g, g.tail(), visited);
  if (out.sequence.size() != g.num_half_edges()) {
    throw Error(ErrorKind::kBoundaryNumber, "boundary order needs boundary number 1, got " +
                                                std::to_string(boundary_number(g)));
  }
  out.rank.resize(g.num_half_edges());
  for (std::size_t i = 0; i < out.sequence.size(); ++i) {
    out.rank[static_cast<std::size_t>(out.sequence[i].code())] = i;
  }
  return out;
}

Canonical canonicalize(const FatGraph& g) {
  const BoundaryOrder order = boundary_order(g);
  auto rank_of = [&](OrientedEdge h) { return order.rank[static_cast<std::size_t>(h.code())]; };

  std::vector<int> slots(g.num_edges());
  std::iota(slots.begin(), slots.end(), 0);
  auto first_rank = [&](int s) {
    return std::min(rank_of(OrientedEdge::of(s, true)), rank_of(OrientedEdge::of(s, false)));
  };
  std::sort(slots.begin(), slots.end(), [&](int a, int b) { return first_rank(a) < first_rank(b); });

  std::vector<std::int64_t> labels(g.num_edges());
  std::vector<OrientedEdge> relabel(g.num_half_edges());
  for (std::size_t ns = 0; ns < slots.size(); ++ns) {
    const int s = slots[ns];
    labels[ns] = static_cast<std::int64_t>(first_rank(s));
    const bool plus_first = rank_of(OrientedEdge::of(s, true)) < rank_of(OrientedEdge::of(s, false));
    relabel[static_cast<std::size_t>(OrientedEdge::of(s, true).code())] =
        OrientedEdge::of(static_cast<int>(ns), plus_first);
    relabel[static_cast<std::size_t>(OrientedEdge::of(s, false).code())] =
        OrientedEdge::of(static_cast<int>(ns), !plus_first);
  }

  struct Keyed {
    std::size_t key;
    std::vector<OrientedEdge> inward;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(g.num_vertices());
  for (const Vertex& v : g.vertices()) {
    auto min_it = std::min_element(v.inward.begin(), v.inward.end(),
                                   [&](OrientedEdge a, OrientedEdge b) { return rank_of(a) < rank_of(b); });
    Keyed k{rank_of(*min_it), {}};
    for (std::size_t i = 0; i < v.inward.size(); ++i) {
      const auto p = static_cast<std::size_t>(min_it - v.inward.begin());
      k.inward.push_back(relabel[static_cast<std::size_t>(v.inward[(p + i) % v.inward.size()].code())]);
    }
    keyed.push_back(std::move(k));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    vertices.push_back(Vertex{static_cast<std::int64_t>(i), std::move(keyed[i].inward)});
  }
  const OrientedEdge tail = relabel[static_cast<std::size_t>(g.tail().code())];
  return Canonical{FatGraph(std::move(labels), std::move(vertices), tail), std::move(relabel)};
}

std::optional<std::vector<OrientedEdge>> find_isomorphism(const FatGraph& g, const FatGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  const std::size_t bg = boundary_number(g);
  const std::size_t bh = boundary_number(h);
  if (bg != bh) return std::nullopt;
  if (bg != 1) {
    throw Error(ErrorKind::kBoundaryNumber, "isomorphism test needs boundary number 1");
  }
  const Canonical cg = canonicalize(g);
  const Canonical ch = canonicalize(h);
  if (!(cg.graph == ch.graph)) return std::nullopt;
  std::vector<OrientedEdge> from_canonical(h.num_half_edges());
  for (std::size_t code = 0; code < h.num_half_edges(); ++code) {
    from_canonical[static_cast<std::size_t>(ch.relabel[code].code())] =
        OrientedEdge::from_code(static_cast<int>(code));
  }
  std::vector<OrientedEdge> iso(g.num_half_edges());
  for (std::size_t code = 0; code < g.num_half_edges(); ++code) {
    iso[code] = from_canonical[static_cast<std::size_t>(cg.relabel[code].code())];
  }
  return iso;
}

std::string to_string(const FatGraph& g, const BoundaryWord& w) {
  std::ostringstream os;
  for (std::size_t c = 0; c < w.cycles.size(); ++c) {
    if (c) os << ' ';
    os << '(';
    for (std::size_t i = 0; i < w.cycles[c].size(); ++i) {
      if (i) os << ' ';
      os << g.name(w.cycles[c][i]);
    }
    os << ')';
  }
  return os.str();
}

}  // namespace fatmark
