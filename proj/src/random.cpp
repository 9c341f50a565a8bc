#include "fatmark/random.hpp"

#include <algorithm>
#include <numeric>

#include "fatmark/error.hpp"
#include "fatmark/flips.hpp"

namespace fatmark {

namespace {

std::size_t uniform(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Vertex rose(std::size_t genus) {
  // Slots 2i and 2i+1 are x_i and y_i; the rotation x+ y+ x- y- per block
  // gives a single boundary cycle.
  Vertex v{0, {}};
  for (std::size_t i = 0; i < genus; ++i) {
    const int x = static_cast<int>(2 * i), y = static_cast<int>(2 * i + 1);
    v.inward.push_back(OrientedEdge::of(x, true));
    v.inward.push_back(OrientedEdge::of(y, true));
    v.inward.push_back(OrientedEdge::of(x, false));
    v.inward.push_back(OrientedEdge::of(y, false));
  }
  return v;
}

}  // namespace

FatGraph random_fatgraph(Rng& rng, std::size_t genus, std::size_t flips) {
  if (genus == 0) throw Error(ErrorKind::kGenus, "random graphs need genus at least 1");
  std::vector<Vertex> vertices{rose(genus)};
  std::size_t num_slots = 2 * genus;

  // Split vertices until all are trivalent: a cyclic arc of k >= 2
  // half-edges moves to a new vertex joined to the old one by a new edge.
  for (;;) {
    std::vector<std::size_t> big;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v].inward.size() > 3) big.push_back(v);
    if (big.empty()) break;
    Vertex& old = vertices[big[uniform(rng, big.size())]];
    const std::size_t val = old.inward.size();
    const std::size_t k = 2 + uniform(rng, val - 3);
    std::rotate(old.inward.begin(), old.inward.begin() + static_cast<std::ptrdiff_t>(uniform(rng, val)),
                old.inward.end());
    const int n = static_cast<int>(num_slots++);
    Vertex fresh{static_cast<std::int64_t>(vertices.size()), {OrientedEdge::of(n, true)}};
    fresh.inward.insert(fresh.inward.end(), old.inward.begin(),
                        old.inward.begin() + static_cast<std::ptrdiff_t>(k));
    old.inward.erase(old.inward.begin(), old.inward.begin() + static_cast<std::ptrdiff_t>(k));
    old.inward.insert(old.inward.begin(), OrientedEdge::of(n, false));
    vertices.push_back(std::move(fresh));
  }

  // Subdivide a random edge s at a new vertex carrying the tail t.
  const int s = static_cast<int>(uniform(rng, num_slots));
  const int m = static_cast<int>(num_slots++);
  const int t = static_cast<int>(num_slots++);
  for (Vertex& v : vertices) {
    for (OrientedEdge& h : v.inward) {
      if (h == OrientedEdge::of(s, false)) h = OrientedEdge::of(m, true);
    }
  }
  Vertex c{static_cast<std::int64_t>(vertices.size()),
           {OrientedEdge::of(s, false), OrientedEdge::of(m, false), OrientedEdge::of(t, true)}};
  if (std::bernoulli_distribution(0.5)(rng)) std::swap(c.inward[0], c.inward[1]);
  vertices.push_back(std::move(c));
  vertices.push_back(Vertex{static_cast<std::int64_t>(vertices.size()), {OrientedEdge::of(t, false)}});

  std::vector<std::int64_t> labels(num_slots);
  std::iota(labels.begin(), labels.end(), 0);
  FatGraph g(std::move(labels), std::move(vertices), OrientedEdge::of(t, true));

  for (std::size_t i = 0; i < flips; ++i) {
    OrientedEdge e;
    if (!random_flip_edge(rng, g, e)) break;
    g = flip(g, e).graph;
  }
  return random_relabel(rng, g).graph;
}

Relabeled random_relabel(Rng& rng, const FatGraph& g) {
  const std::size_t ne = g.num_edges();
  std::vector<int> slot_perm(ne);
  std::iota(slot_perm.begin(), slot_perm.end(), 0);
  std::shuffle(slot_perm.begin(), slot_perm.end(), rng);
  std::vector<bool> swap_orientation(ne);
  for (std::size_t s = 0; s < ne; ++s) swap_orientation[s] = std::bernoulli_distribution(0.5)(rng);

  std::vector<std::int64_t> pool(3 * ne + 3);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::int64_t> labels(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(ne));

  std::vector<OrientedEdge> map(g.num_half_edges());
  for (std::size_t s = 0; s < ne; ++s) {
    for (bool plus : {true, false}) {
      const OrientedEdge h = OrientedEdge::of(static_cast<int>(s), plus);
      map[static_cast<std::size_t>(h.code())] =
          OrientedEdge::of(slot_perm[s], swap_orientation[s] ? !plus : plus);
    }
  }

  std::vector<std::size_t> vertex_order(g.num_vertices());
  std::iota(vertex_order.begin(), vertex_order.end(), 0);
  std::shuffle(vertex_order.begin(), vertex_order.end(), rng);
  std::vector<std::int64_t> ids(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(g.num_vertices()));
  std::shuffle(ids.begin(), ids.end(), rng);

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vertex_order.size(); ++i) {
    const Vertex& v = g.vertex(vertex_order[i]);
    Vertex out{ids[i], {}};
    for (OrientedEdge h : v.inward) out.inward.push_back(map[static_cast<std::size_t>(h.code())]);
    std::rotate(out.inward.begin(),
                out.inward.begin() + static_cast<std::ptrdiff_t>(uniform(rng, out.inward.size())),
                out.inward.end());
    vertices.push_back(std::move(out));
  }
  FatGraph h(std::move(labels), std::move(vertices), map[static_cast<std::size_t>(g.tail().code())]);
  return {std::move(h), std::move(map)};
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<int> mult(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = uniform(rng, n);
    const std::size_t j = uniform(rng, n);
    if (i == j) continue;
    const std::int64_t k = mult(rng);
    for (std::size_t c = 0; c < n; ++c) m(i, c) = checked::add(m(i, c), checked::mul(k, m(j, c)));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t sign = std::bernoulli_distribution(0.5)(rng) ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) out(r, c) = sign * m(perm[r], c);
  }
  return out;
}

Marking random_marking(Rng& rng, const FatGraph& g, std::size_t rank) {
  const std::vector<KElement> classes = edge_classes(g);
  const std::size_t b1 = classes.front().rank();
  if (rank == 0 || rank > b1) {
    throw Error(ErrorKind::kRankMismatch, "surjective coherent markings need 1 <= rank <= " +
                                              std::to_string(b1));
  }
  const IntMatrix u = random_unimodular(rng, b1);
  IntMatrix r(rank, b1);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = 0; c < b1; ++c) r(i, c) = u(i, c);
  Marking mu{rank, {}};
  for (const KElement& c : classes) mu.values.push_back(apply(r, c));
  return mu;
}

bool random_flip_edge(Rng& rng, const FatGraph& g, OrientedEdge& out) {
  const std::vector<int> slots = flippable_slots(g);
  if (slots.empty()) return false;
  out = OrientedEdge::of(slots[uniform(rng, slots.size())], std::bernoulli_distribution(0.5)(rng));
  return true;
}

}  // namespace fatmark
