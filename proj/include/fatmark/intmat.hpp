#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fatmark {

// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<std::int64_t> row(std::size_t r) const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;          // echelon form, positive pivots, reduced above pivots
  IntMatrix transform;  // unimodular, transform * input == h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Row-style Hermite normal form over Z.
HermiteForm hermite(const IntMatrix& a);

// True iff the rows of `a` generate Z^{cols}.
bool rows_span_lattice(const IntMatrix& a);

IntMatrix inverse_unimodular(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace fatmark
