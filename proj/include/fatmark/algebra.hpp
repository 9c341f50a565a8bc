#pragma once

// Exact integer arithmetic in K = Z^r and in the derived groups
// Lambda^2 K, Lambda^3 K and S^2 Lambda^2 K. Every element carries its rank
// and is kept in a canonical sparse normal form, so equality is coordinatewise.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fatmark/error.hpp"

namespace fatmark {

class IntMatrix;

class KElement {
 public:
  KElement() = default;
  explicit KElement(std::size_t rank) : coords_(rank, 0) {}
  explicit KElement(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}
  KElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static KElement basis(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }
  bool is_zero() const;

  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);

  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator-(const KElement& a);
  friend KElement operator*(std::int64_t s, const KElement& a);
  friend bool operator==(const KElement&, const KElement&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

void require_same_rank(std::size_t a, std::size_t b, const char* what);

// Sparse integer combination of canonical basis keys. The Tag keeps Wedge2,
// Wedge3 and SymWedge distinct types even where their key shapes coincide.
template <class Key, class Tag>
class SparseTerms {
 public:
  using key_type = Key;

  SparseTerms() = default;
  explicit SparseTerms(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  // `key` must already be in canonical form (see the free constructors below).
  void add_term(const Key& key, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second = checked::add(it->second, coefficient);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparseTerms& operator+=(const SparseTerms& other) {
    require_same_rank(rank_, other.rank_, "sum");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }
  SparseTerms& operator-=(const SparseTerms& other) {
    require_same_rank(rank_, other.rank_, "difference");
    for (const auto& [key, c] : other.terms_) add_term(key, checked::neg(c));
    return *this;
  }

  friend SparseTerms operator+(SparseTerms a, const SparseTerms& b) {
    return a += b;
  }
  friend SparseTerms operator-(SparseTerms a, const SparseTerms& b) {
    return a -= b;
  }
  friend SparseTerms operator-(const SparseTerms& a) {
    SparseTerms out(a.rank_);
    for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, checked::neg(c));
    return out;
  }
  friend SparseTerms operator*(std::int64_t s, const SparseTerms& a) {
    SparseTerms out(a.rank_);
    if (s == 0) return out;
    for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, checked::mul(s, c));
    return out;
  }
  friend bool operator==(const SparseTerms&, const SparseTerms&) = default;

 private:
  std::size_t rank_ = 0;
  std::map<Key, std::int64_t> terms_;
};

struct Wedge2Tag {};
struct Wedge3Tag {};
struct SymWedgeTag {};

// Key (i, j) with i < j stands for e_i ^ e_j.
using Wedge2 = SparseTerms<std::array<int, 2>, Wedge2Tag>;
// Key (i, j, k) with i < j < k stands for e_i ^ e_j ^ e_k.
using Wedge3 = SparseTerms<std::array<int, 3>, Wedge3Tag>;
// Coordinates of a symmetric tensor in Lambda^2 K (x) Lambda^2 K. Key
// (p, q) with p <= q (each p, q a Wedge2 key, flattened to four ints) holds
// the common coefficient of p(x)q and q(x)p; for p == q it is the
// coefficient of p(x)p.
using SymWedge = SparseTerms<std::array<int, 4>, SymWedgeTag>;

Wedge2 basis_wedge2(std::size_t rank, int i, int j);
Wedge3 basis_wedge3(std::size_t rank, int i, int j, int k);

Wedge2 wedge2(const KElement& x, const KElement& y);
Wedge3 wedge3(const KElement& x, const KElement& y, const KElement& z);
// u (x) v + v (x) u.
SymWedge sym_pair(const Wedge2& u, const Wedge2& v);
// u (x) u.
SymWedge tensor_square(const Wedge2& u);

// Functorial action of an integer r x r matrix T acting on column vectors.
KElement apply(const IntMatrix& t, const KElement& x);
Wedge2 apply(const IntMatrix& t, const Wedge2& x);
Wedge3 apply(const IntMatrix& t, const Wedge3& x);
SymWedge apply(const IntMatrix& t, const SymWedge& x);

std::string to_string(const KElement& x);
std::string to_string(const Wedge2& x);
std::string to_string(const Wedge3& x);
std::string to_string(const SymWedge& x);

}  // namespace fatmark
