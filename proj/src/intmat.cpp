#include "fatmark/intmat.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "fatmark/error.hpp"

namespace fatmark {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::kInvalidArgument, "ragged matrix initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kRankMismatch, "matrix product size mismatch");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
      }
    }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; intermediate entries stay below
  // 2^62 so every product fits in 128 bits.
  __extension__ typedef __int128 wide;
  std::vector<wide> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> wide& { return a[r * n + c]; };
  const wide limit = static_cast<wide>(1) << 62;
  wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        wide v = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        if (v > limit || v < -limit) {
          throw Error(ErrorKind::kOverflow, "determinant overflow");
        }
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  wide det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) {
    throw Error(ErrorKind::kOverflow, "determinant overflow");
  }
  return static_cast<std::int64_t>(det);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hermite(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteForm out{a, IntMatrix::identity(m), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.transform;

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(h(r1, c), h(r2, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u(r1, c), u(r2, c));
  };
  // row[target] -= q * row[source]
  auto axpy = [&](std::size_t target, std::size_t source, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c)
      h(target, c) = checked::sub(h(target, c), checked::mul(q, h(source, c)));
    for (std::size_t c = 0; c < m; ++c)
      u(target, c) = checked::sub(u(target, c), checked::mul(q, u(source, c)));
  };
  auto negate = [&](std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) h(r, c) = checked::neg(h(r, c));
    for (std::size_t c = 0; c < m; ++c) u(r, c) = checked::neg(u(r, c));
  };

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < n && pivot_row < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t r = pivot_row; r < m; ++r) {
        if (h(r, c) != 0 && (best == m || std::llabs(h(r, c)) < std::llabs(h(best, c)))) {
          best = r;
        }
      }
      if (best == m) break;
      swap_rows(best, pivot_row);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < m; ++r) {
        if (h(r, c) == 0) continue;
        axpy(r, pivot_row, floor_div(h(r, c), h(pivot_row, c)));
        if (h(r, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) negate(pivot_row);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      axpy(r, pivot_row, floor_div(h(r, c), h(pivot_row, c)));
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

bool rows_span_lattice(const IntMatrix& a) {
  HermiteForm hf = hermite(a);
  if (hf.rank != a.cols()) return false;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    if (hf.h(i, i) != 1) return false;
  }
  return true;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kNotInvertible, "non-square matrix is not invertible");
  }
  HermiteForm hf = hermite(m);
  if (!(hf.h == IntMatrix::identity(m.rows()))) {
    throw Error(ErrorKind::kNotInvertible, "matrix is not invertible over Z");
  }
  return hf.transform;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
  }
  return "[" + os.str() + "]";
}

}  // namespace fatmark
