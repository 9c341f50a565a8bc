#include "doctest.h"
#include "fatmark/error.hpp"
#include "fatmark/intmat.hpp"
#include "fatmark/random.hpp"

using namespace fatmark;

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 2, 1}, {3, 0, 0}, {1, 1, 5}}) == -27);
}

TEST_CASE("hermite form satisfies U A = H") {
  const IntMatrix a{{2, 4}, {3, 5}, {1, 1}};
  const HermiteForm hf = hermite(a);
  CHECK(hf.transform * a == hf.h);
  CHECK(hf.rank == 2);
  CHECK(hf.h(0, 0) == 1);
  CHECK(hf.h(1, 1) == 2);
  CHECK(hf.h(0, 1) >= 0);
  CHECK(hf.h(0, 1) < 2);
  CHECK(std::abs(determinant(hf.transform)) == 1);
}

TEST_CASE("lattice spanning") {
  CHECK(rows_span_lattice(IntMatrix{{2, 0}, {3, 0}, {0, 1}}));
  CHECK_FALSE(rows_span_lattice(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_FALSE(rows_span_lattice(IntMatrix{{1, 1}, {2, 2}}));
}

TEST_CASE("random unimodular matrices invert") {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    const IntMatrix u = random_unimodular(rng, n);
    CHECK(std::abs(determinant(u)) == 1);
    CHECK(inverse_unimodular(u) * u == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
}
