#include "fatmark/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fatmark/intmat.hpp"

namespace fatmark {

void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::kRankMismatch, std::string(what) + ": rank " +
                                              std::to_string(a) + " vs " +
                                              std::to_string(b));
  }
}

KElement KElement::basis(std::size_t rank, std::size_t i) {
  if (i >= rank) throw Error(ErrorKind::kIndexRange, "basis index out of range");
  KElement out(rank);
  out.coords_[i] = 1;
  return out;
}

bool KElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c == 0; });
}

KElement& KElement::operator+=(const KElement& other) {
  require_same_rank(rank(), other.rank(), "sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = checked::add(coords_[i], other.coords_[i]);
  }
  return *this;
}

KElement& KElement::operator-=(const KElement& other) {
  require_same_rank(rank(), other.rank(), "difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = checked::sub(coords_[i], other.coords_[i]);
  }
  return *this;
}

KElement operator-(const KElement& a) {
  KElement out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords_[i] = checked::neg(a[i]);
  return out;
}

KElement operator*(std::int64_t s, const KElement& a) {
  KElement out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords_[i] = checked::mul(s, a[i]);
  return out;
}

namespace {

void check_index(std::size_t rank, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= rank) {
    throw Error(ErrorKind::kIndexRange, "basis index out of range");
  }
}

// Sorts idx ascending and returns the sign of the sorting permutation, or 0
// if an index repeats.
template <std::size_t N>
int sort_with_sign(std::array<int, N>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j + 1 < N - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < N; ++j) {
    if (idx[j] == idx[j + 1]) return 0;
  }
  return sign;
}

std::array<int, 4> sym_key(const std::array<int, 2>& p, const std::array<int, 2>& q) {
  if (q < p) return {q[0], q[1], p[0], p[1]};
  return {p[0], p[1], q[0], q[1]};
}

}  // namespace

Wedge2 basis_wedge2(std::size_t rank, int i, int j) {
  check_index(rank, i);
  check_index(rank, j);
  Wedge2 out(rank);
  std::array<int, 2> key{i, j};
  int sign = sort_with_sign(key);
  out.add_term(key, sign);
  return out;
}

Wedge3 basis_wedge3(std::size_t rank, int i, int j, int k) {
  check_index(rank, i);
  check_index(rank, j);
  check_index(rank, k);
  Wedge3 out(rank);
  std::array<int, 3> key{i, j, k};
  int sign = sort_with_sign(key);
  out.add_term(key, sign);
  return out;
}

Wedge2 wedge2(const KElement& x, const KElement& y) {
  require_same_rank(x.rank(), y.rank(), "wedge2");
  const std::size_t r = x.rank();
  Wedge2 out(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      std::int64_t c = checked::sub(checked::mul(x[i], y[j]), checked::mul(x[j], y[i]));
      out.add_term({static_cast<int>(i), static_cast<int>(j)}, c);
    }
  }
  return out;
}

Wedge3 wedge3(const KElement& x, const KElement& y, const KElement& z) {
  require_same_rank(x.rank(), y.rank(), "wedge3");
  require_same_rank(x.rank(), z.rank(), "wedge3");
  const std::size_t r = x.rank();
  Wedge3 out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i || y[j] == 0) continue;
      const std::int64_t xy = checked::mul(x[i], y[j]);
      for (std::size_t k = 0; k < r; ++k) {
        if (k == i || k == j || z[k] == 0) continue;
        std::array<int, 3> key{static_cast<int>(i), static_cast<int>(j),
                               static_cast<int>(k)};
        int sign = sort_with_sign(key);
        out.add_term(key, checked::mul(sign, checked::mul(xy, z[k])));
      }
    }
  }
  return out;
}

SymWedge sym_pair(const Wedge2& u, const Wedge2& v) {
  require_same_rank(u.rank(), v.rank(), "sym_pair");
  SymWedge out(u.rank());
  for (const auto& [p, a] : u.terms()) {
    for (const auto& [q, b] : v.terms()) {
      const std::int64_t ab = checked::mul(a, b);
      out.add_term(sym_key(p, q), p == q ? checked::mul(2, ab) : ab);
    }
  }
  return out;
}

SymWedge tensor_square(const Wedge2& u) {
  SymWedge out(u.rank());
  for (auto it = u.terms().begin(); it != u.terms().end(); ++it) {
    out.add_term(sym_key(it->first, it->first), checked::mul(it->second, it->second));
    for (auto jt = std::next(it); jt != u.terms().end(); ++jt) {
      out.add_term(sym_key(it->first, jt->first), checked::mul(it->second, jt->second));
    }
  }
  return out;
}

namespace {

KElement column(const IntMatrix& t, std::size_t c) {
  std::vector<std::int64_t> v(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) v[r] = t(r, c);
  return KElement(std::move(v));
}

void require_square_action(const IntMatrix& t, std::size_t rank) {
  if (t.rows() != t.cols() || t.cols() != rank) {
    throw Error(ErrorKind::kRankMismatch,
                "matrix of size " + std::to_string(t.rows()) + "x" +
                    std::to_string(t.cols()) + " cannot act on rank " +
                    std::to_string(rank));
  }
}

}  // namespace

KElement apply(const IntMatrix& t, const KElement& x) {
  if (t.cols() != x.rank()) {
    throw Error(ErrorKind::kRankMismatch, "matrix/vector size mismatch");
  }
  std::vector<std::int64_t> out(t.rows(), 0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      out[r] = checked::add(out[r], checked::mul(t(r, c), x[c]));
    }
  }
  return KElement(std::move(out));
}

Wedge2 apply(const IntMatrix& t, const Wedge2& x) {
  require_square_action(t, x.rank());
  Wedge2 out(x.rank());
  for (const auto& [key, c] : x.terms()) {
    out += c * wedge2(column(t, key[0]), column(t, key[1]));
  }
  return out;
}

Wedge3 apply(const IntMatrix& t, const Wedge3& x) {
  require_square_action(t, x.rank());
  Wedge3 out(x.rank());
  for (const auto& [key, c] : x.terms()) {
    out += c * wedge3(column(t, key[0]), column(t, key[1]), column(t, key[2]));
  }
  return out;
}

SymWedge apply(const IntMatrix& t, const SymWedge& x) {
  require_square_action(t, x.rank());
  const std::size_t r = x.rank();
  SymWedge out(r);
  for (const auto& [key, c] : x.terms()) {
    Wedge2 p = fatmark::apply(t, basis_wedge2(r, key[0], key[1]));
    if (key[0] == key[2] && key[1] == key[3]) {
      out += c * tensor_square(p);
    } else {
      Wedge2 q = fatmark::apply(t, basis_wedge2(r, key[2], key[3]));
      out += c * sym_pair(p, q);
    }
  }
  return out;
}

std::string to_string(const KElement& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (i) os << ' ';
    os << x[i];
  }
  return os.str();
}

namespace {

template <class Terms, class KeyPrinter>
std::string format_terms(const Terms& t, KeyPrinter print_key) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    if (!first) os << ' ';
    first = false;
    os << (c > 0 ? "+" : "") << c << '*';
    print_key(os, key);
  }
  return os.str();
}

}  // namespace

std::string to_string(const Wedge2& x) {
  return format_terms(x, [](std::ostream& os, const std::array<int, 2>& k) {
    os << 'e' << k[0] + 1 << "^e" << k[1] + 1;
  });
}

std::string to_string(const Wedge3& x) {
  return format_terms(x, [](std::ostream& os, const std::array<int, 3>& k) {
    os << 'e' << k[0] + 1 << "^e" << k[1] + 1 << "^e" << k[2] + 1;
  });
}

std::string to_string(const SymWedge& x) {
  return format_terms(x, [](std::ostream& os, const std::array<int, 4>& k) {
    os << "(e" << k[0] + 1 << "^e" << k[1] + 1 << ")(e" << k[2] + 1 << "^e"
       << k[3] + 1 << ')';
  });
}

}  // namespace fatmark
