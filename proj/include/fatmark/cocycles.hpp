#pragma once

// Per-flip cocycle values, their sums along flip paths, and the twisted
// cocycle condition for closed paths.
//
// With the neighbours (a, b, c, d) of a flip read as in FlipContext and
// mu the marking before the flip:
//   m = mu(a) + mu(c)                                  in K
//   j = mu(a) ^ mu(b) ^ mu(c)                          in Lambda^3 K
//   s = [mu(a)^mu(c)](x)[mu(b)^mu(d)] + (swapped)      in S^2 Lambda^2 K

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fatmark/algebra.hpp"
#include "fatmark/flips.hpp"
#include "fatmark/intmat.hpp"
#include "fatmark/markings.hpp"

namespace fatmark {

enum class Cocycle { kM, kJ, kS };

// Accepts "m", "j" or "s".
Cocycle parse_cocycle(std::string_view name);
const char* to_string(Cocycle c);

using CocycleValue = std::variant<KElement, Wedge3, SymWedge>;

// Each throws kCoherence if mu is not coherent at the endpoints of the
// flipped edge.
KElement cocycle_m(const FlipContext& ctx, const Marking& mu);
Wedge3 cocycle_j(const FlipContext& ctx, const Marking& mu);
SymWedge cocycle_s(const FlipContext& ctx, const Marking& mu);
CocycleValue cocycle_value(Cocycle which, const FlipContext& ctx, const Marking& mu);

CocycleValue zero_value(Cocycle which, std::size_t rank);
CocycleValue operator+(const CocycleValue& x, const CocycleValue& y);
bool is_zero(const CocycleValue& v);
std::string to_string(const CocycleValue& v);
// T, Lambda^3 T or S^2 Lambda^2 T according to the alternative held.
CocycleValue act(const IntMatrix& t, const CocycleValue& v);

struct PathSum {
  CocycleValue total;
  std::vector<CocycleValue> steps;
  Marking final;
};

PathSum path_sum(const FlipPath& path, const Marking& mu0, Cocycle which);

// The r x r matrix T with T source(x) = target(x) for every half-edge
// code x. Throws kSurjectivity, kNoInducedAutomorphism or kNotInvertible.
IntMatrix solve_k_automorphism(const Marking& source, const Marking& target);

// T with T mu0(x) = mu_end(iota^-1(x)), where mu_end is mu0 propagated
// along the path and iota the closing isomorphism end -> start.
IntMatrix induced_k_automorphism(const FlipPath& path, const Marking& mu0);

// path1 followed by path2, with path2's flips transported to path1.end()
// through the isomorphism path1.end() -> path2.start().
FlipPath concatenate(const FlipPath& path1, const FlipPath& path2);

// Checks c(path1 path2) = c(path1) + T1 . c(path2) for closed paths whose
// start graphs are isomorphic; mu0 lives on path1.start(). Throws
// kCocycleMismatch showing both sides.
void verify_cocycle_condition(const FlipPath& path1, const FlipPath& path2,
                              const Marking& mu0, Cocycle which);

// Symbolic data for the pentagon and the torus bounding-pair map, written
// over free generators: Z^5 = <a, b, c, d, e> for the pentagon, Z^4 =
// <a, b, c, d> for the bounding-pair phases.
std::vector<KElement> pentagon_m_terms();
std::vector<SymWedge> pentagon_s_terms();

struct Phase {
  std::string name;
  std::vector<KElement> terms;
};
std::vector<Phase> torus_bp_m_phases();

}  // namespace fatmark
