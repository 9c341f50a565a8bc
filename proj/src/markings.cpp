#include "fatmark/markings.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "fatmark/error.hpp"

namespace fatmark {

Marking make_marking(const FatGraph& g, std::size_t rank,
                     const std::vector<std::optional<KElement>>& by_code) {
  if (by_code.size() != g.num_half_edges()) {
    throw Error(ErrorKind::kMarkingShape, "marking must cover every half-edge");
  }
  Marking mu{rank, std::vector<KElement>(g.num_half_edges())};
  for (std::size_t s = 0; s < g.num_edges(); ++s) {
    const OrientedEdge plus = OrientedEdge::of(static_cast<int>(s), true);
    const auto& vp = by_code[static_cast<std::size_t>(plus.code())];
    const auto& vm = by_code[static_cast<std::size_t>(plus.reversed().code())];
    if (!vp && !vm) {
      throw Error(ErrorKind::kMarkingShape, "edge " + std::to_string(g.label(plus.slot())) + " is unmarked");
    }
    for (const auto* v : {&vp, &vm}) {
      if (*v && (*v)->rank() != rank) {
        throw Error(ErrorKind::kMarkingShape, "edge " + std::to_string(g.label(plus.slot())) +
                                                  " carries a value of the wrong rank");
      }
    }
    if (vp && vm && *vp != -*vm) {
      throw Error(ErrorKind::kInversion, "values on " + g.name(plus) + " and " +
                                             g.name(plus.reversed()) + " are not opposite");
    }
    mu.values[static_cast<std::size_t>(plus.code())] = vp ? *vp : -*vm;
    mu.values[static_cast<std::size_t>(plus.reversed().code())] = vm ? *vm : -*vp;
  }
  return mu;
}

void check_marking(const FatGraph& g, const Marking& mu) {
  if (mu.rank == 0) throw Error(ErrorKind::kMarkingShape, "marking rank must be positive");
  if (mu.values.size() != g.num_half_edges()) {
    throw Error(ErrorKind::kMarkingShape, "marking must cover every half-edge");
  }
  for (const KElement& v : mu.values) {
    if (v.rank() != mu.rank) throw Error(ErrorKind::kMarkingShape, "value of the wrong rank");
  }
  for (std::size_t code = 0; code < g.num_half_edges(); code += 2) {
    const OrientedEdge h = OrientedEdge::from_code(static_cast<int>(code));
    if (mu[h] != -mu[h.reversed()]) {
      throw Error(ErrorKind::kInversion, "inversion fails on edge " + g.name(h));
    }
  }
  for (const Vertex& v : g.vertices()) {
    KElement sum(mu.rank);
    for (OrientedEdge h : v.inward) sum += mu[h];
    if (!sum.is_zero()) {
      throw Error(ErrorKind::kCoherence, "coherence fails at vertex " + std::to_string(v.id));
    }
  }
  IntMatrix values(mu.values.size(), mu.rank);
  for (std::size_t i = 0; i < mu.values.size(); ++i)
    for (std::size_t c = 0; c < mu.rank; ++c) values(i, c) = mu.values[i][c];
  if (!rows_span_lattice(values)) {
    throw Error(ErrorKind::kSurjectivity, "marking values do not generate Z^" + std::to_string(mu.rank));
  }
}

Marking propagate(const Marking& mu, const FlipContext& ctx) {
  const KElement& e = mu[ctx.e];
  if (mu[ctx.e.reversed()] != -e) {
    throw Error(ErrorKind::kInversion, "inversion fails on the flipped edge");
  }
  if (!(e + mu[ctx.a] + mu[ctx.b]).is_zero() ||
      !(mu[ctx.e.reversed()] + mu[ctx.c] + mu[ctx.d]).is_zero()) {
    throw Error(ErrorKind::kCoherence, "marking is not coherent at the flipped edge");
  }
  Marking out = mu;
  KElement fresh = mu[ctx.d] + mu[ctx.a];
  out.values[static_cast<std::size_t>(ctx.e_new.reversed().code())] = -fresh;
  out.values[static_cast<std::size_t>(ctx.e_new.code())] = std::move(fresh);
  return out;
}

Marking pull_back(const Marking& mu_h, const std::vector<OrientedEdge>& iso) {
  Marking out{mu_h.rank, {}};
  out.values.reserve(iso.size());
  for (OrientedEdge x : iso) out.values.push_back(mu_h[x]);
  return out;
}

Marking transform(const IntMatrix& t, const Marking& mu) {
  Marking out{t.rows(), {}};
  out.values.reserve(mu.values.size());
  for (const KElement& v : mu.values) out.values.push_back(apply(t, v));
  return out;
}

SymplecticForm::SymplecticForm(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "intersection form must be square");
  }
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j)
      if (gram_(i, j) != -gram_(j, i)) {
        throw Error(ErrorKind::kInvalidArgument, "intersection form must be skew-symmetric");
      }
}

SymplecticForm SymplecticForm::standard(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return SymplecticForm(std::move(j));
}

std::int64_t SymplecticForm::pair(const KElement& x, const KElement& y) const {
  require_same_rank(x.rank(), dimension(), "pairing");
  require_same_rank(y.rank(), dimension(), "pairing");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (gram_(i, j) == 0 || y[j] == 0) continue;
      sum = checked::add(sum, checked::mul(x[i], checked::mul(gram_(i, j), y[j])));
    }
  }
  return sum;
}

int intersection_pattern(const BoundaryOrder& order, OrientedEdge a, OrientedEdge b) {
  // Points on the boundary circle, tagged 0 = a, 1 = b, 2 = a-bar, 3 = b-bar.
  std::array<std::pair<std::size_t, int>, 4> points{{
      {order.rank[static_cast<std::size_t>(a.code())], 0},
      {order.rank[static_cast<std::size_t>(b.code())], 1},
      {order.rank[static_cast<std::size_t>(a.reversed().code())], 2},
      {order.rank[static_cast<std::size_t>(b.reversed().code())], 3},
  }};
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i].first == points[i + 1].first) return 0;
  }
  std::size_t start = 0;
  while (points[start].second != 0) ++start;
  std::array<int, 4> cyclic{};
  for (std::size_t i = 0; i < 4; ++i) cyclic[i] = points[(start + i) % 4].second;
  if (cyclic == std::array<int, 4>{0, 1, 2, 3}) return 1;
  if (cyclic == std::array<int, 4>{0, 3, 2, 1}) return -1;
  return 0;
}

bool is_topological_h(const FatGraph& g, const Marking& mu, const SymplecticForm& form) {
  const BoundaryOrder order = boundary_order(g);
  const std::size_t gen = genus(g);
  if (mu.rank != 2 * gen) {
    throw Error(ErrorKind::kRankMismatch, "H-marking must have rank 2g = " + std::to_string(2 * gen));
  }
  require_same_rank(form.dimension(), mu.rank, "intersection form");
  const std::size_t n = g.num_half_edges();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const OrientedEdge a = OrientedEdge::from_code(static_cast<int>(x));
      const OrientedEdge b = OrientedEdge::from_code(static_cast<int>(y));
      if (form.pair(mu[a], mu[b]) != intersection_pattern(order, a, b)) return false;
    }
  }
  return true;
}

std::vector<KElement> edge_classes(const FatGraph& g) {
  const std::size_t nv = g.num_vertices();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nv, kNone);
  std::vector<int> parent_slot(nv, -1);
  std::vector<bool> tree_slot(g.num_edges(), false);
  std::vector<bool> reached(nv, false);
  std::queue<std::size_t> todo;
  reached[0] = true;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    for (OrientedEdge h : g.vertex(v).inward) {
      const std::size_t w = g.head(h.reversed());
      if (reached[w]) continue;
      reached[w] = true;
      parent[w] = v;
      parent_slot[w] = h.slot();
      tree_slot[static_cast<std::size_t>(h.slot())] = true;
      todo.push(w);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw Error(ErrorKind::kDisconnected, "graph has more than one component");
  }

  std::vector<int> basis_index(g.num_edges(), -1);
  std::size_t b1 = 0;
  for (std::size_t s = 0; s < g.num_edges(); ++s) {
    if (!tree_slot[s]) basis_index[s] = static_cast<int>(b1++);
  }

  auto in_subtree = [&](std::size_t root, std::size_t v) {
    for (; v != kNone; v = parent[v]) {
      if (v == root) return true;
    }
    return false;
  };

  std::vector<KElement> classes(g.num_half_edges(), KElement(b1));
  for (std::size_t s = 0; s < g.num_edges(); ++s) {
    const OrientedEdge plus = OrientedEdge::of(static_cast<int>(s), true);
    KElement value(b1);
    if (!tree_slot[s]) {
      value = KElement::basis(b1, static_cast<std::size_t>(basis_index[s]));
    } else {
      // Summing the vertex relations over the subtree below this edge leaves
      // only the half-edges that cross into it.
      const std::size_t hv = g.head(plus);
      const std::size_t tv = g.head(plus.reversed());
      const std::size_t child = parent[hv] == tv && parent_slot[hv] == plus.slot() ? hv : tv;
      KElement crossing(b1);
      for (std::size_t t = 0; t < g.num_edges(); ++t) {
        if (tree_slot[t]) continue;
        const OrientedEdge h = OrientedEdge::of(static_cast<int>(t), true);
        const bool head_in = in_subtree(child, g.head(h));
        const bool tail_in = in_subtree(child, g.head(h.reversed()));
        if (head_in == tail_in) continue;
        const KElement unit = KElement::basis(b1, static_cast<std::size_t>(basis_index[t]));
        crossing += head_in ? unit : -unit;
      }
      value = child == hv ? -crossing : crossing;
    }
    classes[static_cast<std::size_t>(plus.code())] = value;
    classes[static_cast<std::size_t>(plus.reversed().code())] = -value;
  }
  return classes;
}

namespace {

struct Gcd {
  std::int64_t g, x, y;
};

Gcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
    old_t = checked::sub(old_t, checked::mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

KElement combine(const std::vector<KElement>& rows, const std::vector<std::int64_t>& coeffs,
                 std::size_t rank) {
  KElement out(rank);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (coeffs[j] != 0) out += coeffs[j] * rows[j];
  }
  return out;
}

// Integer symplectic Gram-Schmidt: returns (A_1, B_1, ..., A_g, B_g).
std::vector<KElement> symplectic_basis(const SymplecticForm& form) {
  const std::size_t n = form.dimension();
  std::vector<KElement> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(KElement::basis(n, i));
  std::vector<KElement> out;
  while (!rows.empty()) {
    const KElement u = rows.front();
    std::vector<std::int64_t> coeffs(rows.size(), 0);
    std::int64_t g = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const std::int64_t f = form.pair(u, rows[j]);
      if (f == 0) continue;
      const Gcd r = ext_gcd(g, f);
      for (auto& c : coeffs) c = checked::mul(c, r.x);
      coeffs[j] = checked::add(coeffs[j], r.y);
      g = r.g;
    }
    if (g != 1) {
      throw Error(ErrorKind::kPairing, "boundary pairing is not unimodular");
    }
    const KElement v = combine(rows, coeffs, n);
    std::vector<KElement> projected;
    for (const KElement& w : rows) {
      KElement p = w - form.pair(w, v) * u + form.pair(w, u) * v;
      if (!p.is_zero()) projected.push_back(std::move(p));
    }
    out.push_back(u);
    out.push_back(v);
    rows.clear();
    if (projected.empty()) break;
    IntMatrix gens(projected.size(), n);
    for (std::size_t i = 0; i < projected.size(); ++i)
      for (std::size_t c = 0; c < n; ++c) gens(i, c) = projected[i][c];
    const HermiteForm hf = hermite(gens);
    for (std::size_t i = 0; i < hf.rank; ++i) rows.emplace_back(hf.h.row(i));
  }
  if (out.size() != n) throw Error(ErrorKind::kPairing, "boundary pairing is degenerate");
  return out;
}

}  // namespace

std::pair<Marking, SymplecticForm> canonical_h_marking(const FatGraph& g) {
  const BoundaryOrder order = boundary_order(g);
  const std::size_t gen = genus(g);
  if (gen == 0) throw Error(ErrorKind::kGenus, "genus 0 fatgraphs carry no H-marking");
  const std::vector<KElement> classes = edge_classes(g);
  const std::size_t n = classes.front().rank();
  if (n != 2 * gen) {
    throw Error(ErrorKind::kPairing, "edge class group has rank " + std::to_string(n) +
                                         ", expected " + std::to_string(2 * gen));
  }

  // Representatives of the class basis: the "+" orientation of each
  // non-tree edge is a unit vector.
  std::vector<OrientedEdge> reps(n);
  for (std::size_t code = 0; code < g.num_half_edges(); ++code) {
    const KElement& c = classes[code];
    const auto nonzero = std::count_if(c.coords().begin(), c.coords().end(),
                                       [](std::int64_t x) { return x != 0; });
    if (code % 2 == 0 && nonzero == 1) {
      for (std::size_t i = 0; i < n; ++i)
        if (c[i] == 1) reps[i] = OrientedEdge::from_code(static_cast<int>(code));
    }
  }
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = intersection_pattern(order, reps[i], reps[j]);
  const SymplecticForm pairing(gram);

  for (std::size_t x = 0; x < g.num_half_edges(); ++x) {
    for (std::size_t y = x + 1; y < g.num_half_edges(); ++y) {
      const auto a = OrientedEdge::from_code(static_cast<int>(x));
      const auto b = OrientedEdge::from_code(static_cast<int>(y));
      if (pairing.pair(classes[x], classes[y]) != intersection_pattern(order, a, b)) {
        throw Error(ErrorKind::kPairing, "boundary pairing does not descend to edge classes (" +
                                             g.name(a) + ", " + g.name(b) + ")");
      }
    }
  }
  const std::int64_t det = determinant(gram);
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::kPairing, "boundary pairing has determinant " + std::to_string(det));
  }

  const std::vector<KElement> basis = symplectic_basis(pairing);
  Marking mu{n, {}};
  mu.values.reserve(g.num_half_edges());
  for (const KElement& c : classes) {
    std::vector<std::int64_t> coords(n);
    for (std::size_t i = 0; i < gen; ++i) {
      coords[2 * i] = pairing.pair(c, basis[2 * i + 1]);
      coords[2 * i + 1] = -pairing.pair(c, basis[2 * i]);
    }
    mu.values.emplace_back(std::move(coords));
  }
  SymplecticForm standard = SymplecticForm::standard(gen);
  if (!is_topological_h(g, mu, standard)) {
    throw Error(ErrorKind::kPairing, "symplectic basis extraction failed");
  }
  return {std::move(mu), std::move(standard)};
}

}  // namespace fatmark
