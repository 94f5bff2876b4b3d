#include <doctest.h>

#include <random>

#include "orbitdata/errors.hpp"
#include "orbitdata/intmat.hpp"

using namespace orbitdata;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

void check_smith(const IntMatrix& a, bool force_exact = false) {
  SmithResult s = smith_normal_form(a, force_exact);
  CHECK(multiply(multiply(s.U, a), s.V) == s.D);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  int n = std::min(a.rows(), a.cols());
  for (int i = 0; i + 1 < n; ++i) {
    CHECK(s.D.at(i, i) >= 0);
    if (s.D.at(i + 1, i + 1) != 0) {
      REQUIRE(s.D.at(i, i) != 0);
      CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
    }
  }
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on random matrices") {
  // dimensions where even worst-case elimination fill-in stays inside the
  // 64-bit result envelope
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<int> dim(1, 5);
    check_smith(random_matrix(rng, dim(rng), dim(rng)));
  }
}

TEST_CASE("smith normal form on banded lattice-style matrices") {
  // wide but shallow, like the stacked coordinate matrices the oracle
  // reduces: few rows bound the number of elimination steps
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> entry(-8, 8);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a(5, 64);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 64; ++j) a.at(i, j) = entry(rng) % 3 == 0 ? entry(rng) : 0;
    check_smith(a);
  }
}

TEST_CASE("smith normal form known diagonal") {
  IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithResult s = smith_normal_form(a);
  CHECK(s.D.at(0, 0) == 2);
  CHECK(s.D.at(1, 1) == 2);
  CHECK(s.D.at(2, 2) == 156);
}

TEST_CASE("both arithmetic paths agree") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = random_matrix(rng, 5, 5);
    SmithResult fast = smith_normal_form(a, false);
    SmithResult exact = smith_normal_form(a, true);
    CHECK(fast.D == exact.D);
  }
}

TEST_CASE("huge entries fall back to exact arithmetic") {
  // determinant 1 by construction, so the Smith form is the identity and the
  // transforms stay near the input scale, but the Bezout products overflow
  // 64 bits and force the arbitrary-precision rerun
  long long big = 1LL << 35;
  IntMatrix a = IntMatrix::from_rows({{big, big - 1}, {big + 1, big}});
  check_smith(a);
  SmithResult s = smith_normal_form(a);
  CHECK(s.D.at(0, 0) == 1);
  CHECK(s.D.at(1, 1) == 1);
}

TEST_CASE("right kernel") {
  IntMatrix a = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  IntMatrix k = right_kernel_rows(a);
  REQUIRE(k.rows() == 2);
  for (int i = 0; i < k.rows(); ++i) {
    long long dot0 = 0;
    for (int j = 0; j < 3; ++j) dot0 += a.at(0, j) * k.at(i, j);
    CHECK(dot0 == 0);
  }
}

TEST_CASE("row-span solve and membership") {
  IntMatrix a = IntMatrix::from_rows({{2, 0, 1}, {0, 3, 1}});
  RowSpanSolver solver(a);
  auto x = solver.solve({2, 3, 2});
  REQUIRE(x.has_value());
  CHECK((*x)[0] * 2 == 2);
  CHECK(solver.contains({4, 0, 2}));
  CHECK(!solver.contains({1, 0, 0}));
  CHECK(!solver.contains({0, 0, 1}));

  // consistency with the one-shot helper
  CHECK(in_row_span(a, {2, 3, 2}));
  CHECK(!in_row_span(a, {1, 1, 1}));
}

TEST_CASE("solve on empty lattices") {
  IntMatrix none(0, 4);
  CHECK(in_row_span(none, {0, 0, 0, 0}));
  CHECK(!in_row_span(none, {1, 0, 0, 0}));
}
