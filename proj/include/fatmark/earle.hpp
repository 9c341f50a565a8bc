#pragma once

// Free-group words over the surface generators, Morita's d-function and
// the Earle cocycle on automorphisms given by generator images.
//
// Generator indices: alpha_i -> 2(i-1), beta_i -> 2(i-1)+1. Rank-two
// words over {alpha, beta} use indices 0 and 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fatmark/algebra.hpp"
#include "fatmark/intmat.hpp"

namespace fatmark {

struct Letter {
  int gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word.
struct FreeWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord reduce(const std::vector<Letter>& raw);
FreeWord operator*(const FreeWord& x, const FreeWord& y);
FreeWord inverse(const FreeWord& w);

// Tokens "a", "b" (rank two) or "a1", "b1", "a2", ... with a trailing
// apostrophe for inverses, e.g. "a2 b2' a2'". Whitespace between tokens is
// optional; "1" denotes the empty word. Throws ParseError.
FreeWord parse_word(std::string_view text);

enum class WordStyle { kRankTwo, kSurface };
std::string to_string(const FreeWord& w, WordStyle style = WordStyle::kSurface);

// (epsilon_k, delta_k) pairs of the greedy packing
// x = a^e1 b^d1 ... a^en b^dn. Throws kUnknownGenerator on letters other
// than alpha and beta.
std::vector<std::pair<int, int>> morita_normal_form(const FreeWord& w);
std::int64_t morita_d(const FreeWord& w);

// p_i: alpha_i -> alpha, beta_i -> beta, other generators -> 1.
// Throws kIndexRange unless 1 <= i <= genus, kUnknownGenerator for letters
// outside the genus.
FreeWord project(const FreeWord& w, std::size_t i, std::size_t genus);
std::int64_t morita_d_surface(const FreeWord& w, std::size_t genus);

class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  explicit FreeAutomorphism(std::size_t genus) : images_(2 * genus) {}

  std::size_t genus() const { return images_.size() / 2; }
  void set_image(int gen, FreeWord image);
  const std::optional<FreeWord>& image(int gen) const;

  // Throws kMissingImage for a letter without an image.
  FreeWord apply(const FreeWord& w) const;

 private:
  std::vector<std::optional<FreeWord>> images_;
};

FreeAutomorphism identity_automorphism(std::size_t genus);

// Lines "gen -> word", '#' comments. Throws ParseError.
FreeAutomorphism parse_automorphism(std::string_view text, std::size_t genus);

// Action on H = Z^{2g} in the basis (A_1, B_1, ..., A_g, B_g).
IntMatrix abelianization(const FreeAutomorphism& phi);

enum class EarleMode {
  kDirect,   // value of the Earle cocycle on phi
  kInverse,  // value on phi^-1
};

struct EarleResult {
  KElement h;                             // coordinates in (A_1, B_1, ...)
  std::vector<std::int64_t> differences;  // d(phi(x)) - d(x) per generator
};

// Builds lambda(x) = d(phi(x)) - d(x) on the generators and converts it to
// the class h with h . y = lambda(y). Additivity of lambda is probed on
// `trials` random word pairs; failure throws kNotHomomorphism.
EarleResult earle_f(const FreeAutomorphism& phi, EarleMode mode = EarleMode::kDirect,
                    std::size_t trials = 200, std::uint64_t seed = 1);

// "-2*B2", "+1*A1 -3*B2", or "0".
std::string to_h_string(const KElement& h);

}  // namespace fatmark
