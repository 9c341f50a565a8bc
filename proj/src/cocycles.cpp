#include "fatmark/cocycles.hpp"

#include <algorithm>

#include "fatmark/error.hpp"

namespace fatmark {

Cocycle parse_cocycle(std::string_view name) {
  if (name == "m") return Cocycle::kM;
  if (name == "j") return Cocycle::kJ;
  if (name == "s") return Cocycle::kS;
  throw Error(ErrorKind::kInvalidArgument, "unknown cocycle '" + std::string(name) + "'");
}

const char* to_string(Cocycle c) {
  switch (c) {
    case Cocycle::kM: return "m";
    case Cocycle::kJ: return "j";
    case Cocycle::kS: return "s";
  }
  return "?";
}

namespace {

void require_local_coherence(const FlipContext& ctx, const Marking& mu) {
  const KElement& e = mu[ctx.e];
  const KElement& ebar = mu[ctx.e.reversed()];
  if (ebar != -e || !(e + mu[ctx.a] + mu[ctx.b]).is_zero() ||
      !(ebar + mu[ctx.c] + mu[ctx.d]).is_zero()) {
    throw Error(ErrorKind::kCoherence, "marking is not coherent at the flipped edge");
  }
}

}  // namespace

KElement cocycle_m(const FlipContext& ctx, const Marking& mu) {
  require_local_coherence(ctx, mu);
  return mu[ctx.a] + mu[ctx.c];
}

Wedge3 cocycle_j(const FlipContext& ctx, const Marking& mu) {
  require_local_coherence(ctx, mu);
  return wedge3(mu[ctx.a], mu[ctx.b], mu[ctx.c]);
}

SymWedge cocycle_s(const FlipContext& ctx, const Marking& mu) {
  require_local_coherence(ctx, mu);
  return sym_pair(wedge2(mu[ctx.a], mu[ctx.c]), wedge2(mu[ctx.b], mu[ctx.d]));
}

CocycleValue cocycle_value(Cocycle which, const FlipContext& ctx, const Marking& mu) {
  switch (which) {
    case Cocycle::kM: return cocycle_m(ctx, mu);
    case Cocycle::kJ: return cocycle_j(ctx, mu);
    case Cocycle::kS: return cocycle_s(ctx, mu);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown cocycle");
}

CocycleValue zero_value(Cocycle which, std::size_t rank) {
  switch (which) {
    case Cocycle::kM: return KElement(rank);
    case Cocycle::kJ: return Wedge3(rank);
    case Cocycle::kS: return SymWedge(rank);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown cocycle");
}

CocycleValue operator+(const CocycleValue& x, const CocycleValue& y) {
  if (x.index() != y.index()) {
    throw Error(ErrorKind::kInvalidArgument, "cannot add values of different cocycles");
  }
  return std::visit(
      [&](const auto& a) -> CocycleValue {
        using T = std::decay_t<decltype(a)>;
        return a + std::get<T>(y);
      },
      x);
}

bool is_zero(const CocycleValue& v) {
  return std::visit([](const auto& a) { return a.is_zero(); }, v);
}

std::string to_string(const CocycleValue& v) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        // A zero element of K prints as "0" too, so totals read uniformly.
        if constexpr (std::is_same_v<T, KElement>) {
          if (a.is_zero()) return "0";
        }
        return fatmark::to_string(a);
      },
      v);
}

CocycleValue act(const IntMatrix& t, const CocycleValue& v) {
  return std::visit([&](const auto& a) -> CocycleValue { return fatmark::apply(t, a); }, v);
}

PathSum path_sum(const FlipPath& path, const Marking& mu0, Cocycle which) {
  PathSum out{zero_value(which, mu0.rank), {}, mu0};
  out.steps.reserve(path.length());
  for (const FlipContext& ctx : path.steps()) {
    CocycleValue v = cocycle_value(which, ctx, out.final);
    out.total = out.total + v;
    out.steps.push_back(std::move(v));
    out.final = propagate(out.final, ctx);
  }
  return out;
}

IntMatrix solve_k_automorphism(const Marking& source, const Marking& target) {
  if (source.values.size() != target.values.size() || source.rank != target.rank) {
    throw Error(ErrorKind::kMarkingShape, "markings have different shapes");
  }
  const std::size_t r = source.rank;
  const std::size_t n = source.values.size();
  IntMatrix x(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < r; ++c) x(i, c) = source.values[i][c];
  const HermiteForm hf = hermite(x);
  bool spans = hf.rank == r;
  for (std::size_t i = 0; spans && i < r; ++i)
    for (std::size_t c = 0; c < r; ++c)
      if (hf.h(i, c) != (i == c ? 1 : 0)) spans = false;
  if (!spans) {
    throw Error(ErrorKind::kSurjectivity, "source marking does not generate K");
  }
  // Row k of the transform expresses e_k through the source values.
  IntMatrix t(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    KElement image(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (hf.transform(k, i) != 0) image += hf.transform(k, i) * target.values[i];
    }
    for (std::size_t row = 0; row < r; ++row) t(row, k) = image[row];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (apply(t, source.values[i]) != target.values[i]) {
      throw Error(ErrorKind::kNoInducedAutomorphism,
                  "no linear map carries the source marking to the target marking");
    }
  }
  const std::int64_t det = determinant(t);
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::kNotInvertible,
                "induced map has determinant " + std::to_string(det));
  }
  return t;
}

IntMatrix induced_k_automorphism(const FlipPath& path, const Marking& mu0) {
  const std::vector<OrientedEdge> iota = path.closing_isomorphism();
  Marking mu = mu0;
  for (const FlipContext& ctx : path.steps()) mu = propagate(mu, ctx);
  Marking target{mu0.rank, std::vector<KElement>(mu0.values.size())};
  for (std::size_t x = 0; x < iota.size(); ++x) {
    target.values[static_cast<std::size_t>(iota[x].code())] = mu.values[x];
  }
  return solve_k_automorphism(mu0, target);
}

FlipPath concatenate(const FlipPath& path1, const FlipPath& path2) {
  const auto tau = find_isomorphism(path1.end(), path2.start());
  if (!tau) {
    throw Error(ErrorKind::kNotClosed, "second path does not start where the first one ends");
  }
  std::vector<OrientedEdge> back(tau->size());
  for (std::size_t x = 0; x < tau->size(); ++x) {
    back[static_cast<std::size_t>((*tau)[x].code())] = OrientedEdge::from_code(static_cast<int>(x));
  }
  FlipPath out = path1;
  for (const FlipContext& ctx : path2.steps()) {
    out.push(back[static_cast<std::size_t>(ctx.e.code())]);
  }
  return out;
}

void verify_cocycle_condition(const FlipPath& path1, const FlipPath& path2,
                              const Marking& mu0, Cocycle which) {
  const auto sigma = find_isomorphism(path2.start(), path1.start());
  if (!sigma) {
    throw Error(ErrorKind::kInvalidArgument, "paths start at non-isomorphic graphs");
  }
  const Marking mu2 = pull_back(mu0, *sigma);
  const IntMatrix t1 = induced_k_automorphism(path1, mu0);
  const CocycleValue lhs = path_sum(concatenate(path1, path2), mu0, which).total;
  const CocycleValue rhs =
      path_sum(path1, mu0, which).total + act(t1, path_sum(path2, mu2, which).total);
  if (lhs != rhs) {
    throw Error(ErrorKind::kCocycleMismatch,
                "cocycle condition fails: " + to_string(lhs) + " != " + to_string(rhs));
  }
}

std::vector<KElement> pentagon_m_terms() {
  const KElement a = KElement::basis(5, 0), b = KElement::basis(5, 1), c = KElement::basis(5, 2),
                 d = KElement::basis(5, 3), e = KElement::basis(5, 4);
  return {b + d, b + e, c + e, a + c, a + d};
}

std::vector<SymWedge> pentagon_s_terms() {
  const KElement a = KElement::basis(5, 0), b = KElement::basis(5, 1), c = KElement::basis(5, 2),
                 d = KElement::basis(5, 3), e = KElement::basis(5, 4);
  const KElement g = a + e, f1 = c + d, g2 = a + b, f3 = d + e, g4 = b + c;
  return {
      sym_pair(wedge2(b, d), wedge2(c, g)),
      sym_pair(wedge2(e, b), wedge2(a, f1)),
      sym_pair(wedge2(e, c), wedge2(g2, d)),
      sym_pair(wedge2(a, c), wedge2(b, f3)),
      sym_pair(wedge2(a, d), wedge2(g4, e)),
  };
}

std::vector<Phase> torus_bp_m_phases() {
  const KElement a = KElement::basis(4, 0), b = KElement::basis(4, 1), c = KElement::basis(4, 2),
                 d = KElement::basis(4, 3);
  const KElement zero(4);
  return {
      {"first twist", {a - c, a - b, zero, a + c, a + b}},
      {"first flip pair", {2 * a + b + d + a + d - c, a + d + 2 * a + b + d - c}},
      {"second twist", {-a + a + b, -a - a + c, zero, -a - a - b, -a - c + a}},
      {"second flip pair", {-d - a - b - d + c, -b - d - a - d + c}},
  };
}

}  // namespace fatmark
