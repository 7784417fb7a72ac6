#include <doctest.h>

#include <random>

#include "welldom/errors.hpp"
#include "welldom/linalg.hpp"

using namespace welldom;

namespace {

RationalMatrix matrix(std::size_t cols, std::vector<std::vector<long>> rows) {
  RationalMatrix m(cols);
  for (auto& r : rows) {
    RationalVector row;
    for (long x : r) row.emplace_back(x);
    m.add_row(row);
  }
  return m;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  RationalMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    RationalVector row;
    for (std::size_t j = 0; j < cols; ++j) row.emplace_back(sparse(rng) ? 0 : entry(rng), 1 + (j % 2));
    for (auto& q : row) q.canonicalize();
    m.add_row(row);
  }
  return m;
}

}  // namespace

TEST_CASE("rational text") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("rref") {
  RrefResult r = rref(matrix(3, {{2, 4, 6}, {1, 2, 3}, {0, 1, 1}}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.matrix == matrix(3, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(rref(RationalMatrix(4)).matrix.rows() == 0);
  CHECK(rref(matrix(2, {{0, 0}})).matrix.rows() == 0);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(matrix(3, {{1, -1, 0}, {0, 1, -1}})) == SubspaceBasis::constants(3));
  CHECK(nullspace(RationalMatrix(3)) == SubspaceBasis::full(3));
  CHECK(nullspace(matrix(2, {{1, 0}, {0, 1}})).dimension() == 0);

  // w1=w2+w3, w11=w9+w10, w5=w6=w7, w4=w8=0 on 11 coordinates (0-based)
  RationalMatrix c(11);
  auto eq = [&](std::vector<std::pair<int, long>> terms) {
    RationalVector row(11);
    for (auto [i, x] : terms) row[i] = x;
    c.add_row(row);
  };
  eq({{0, 1}, {1, -1}, {2, -1}});
  eq({{10, 1}, {8, -1}, {9, -1}});
  eq({{4, 1}, {5, -1}});
  eq({{5, 1}, {6, -1}});
  eq({{3, 1}});
  eq({{7, 1}});
  CHECK(nullspace(c).dimension() == 5);
}

TEST_CASE("subspace relations") {
  SubspaceBasis line = SubspaceBasis::constants(3);
  SubspaceBasis plane = SubspaceBasis::span_of(matrix(3, {{1, 1, 1}, {1, 0, 0}}));
  CHECK(subspace_contains(plane, line));
  CHECK_FALSE(subspace_contains(line, plane));
  CHECK(subspace_equal(plane, SubspaceBasis::span_of(matrix(3, {{0, 1, 1}, {2, 1, 1}}))));
  CHECK_THROWS_AS(subspace_equal(line, SubspaceBasis::constants(4)), DomainError);
  RationalVector x{Rational(5), Rational(2), Rational(2)};
  CHECK(plane.contains(x));
  x[2] = 3;
  CHECK_FALSE(plane.contains(x));
}

TEST_CASE("direct sum") {
  std::vector<SubspaceBasis> parts{SubspaceBasis::constants(2), SubspaceBasis::full(1)};
  std::vector<std::vector<int>> blocks{{0, 2}, {1}};
  SubspaceBasis s = direct_sum(3, parts, blocks);
  CHECK(s == SubspaceBasis::span_of(matrix(3, {{1, 0, 1}, {0, 1, 0}})));
}

TEST_CASE("row space") {
  RowSpace rs(3);
  CHECK(rs.add({Rational(1), Rational(-1), Rational(0)}));
  CHECK_FALSE(rs.add({Rational(2), Rational(-2), Rational(0)}));
  CHECK(rs.contains({Rational(-3), Rational(3), Rational(0)}));
  CHECK(rs.add({Rational(0), Rational(1), Rational(-1)}));
  CHECK(rs.rank() == 2);
  CHECK(nullspace(rs.matrix()) == SubspaceBasis::constants(3));
}

TEST_CASE("linear algebra invariants on random matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
    std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    RationalMatrix m = random_matrix(rng, rows, cols);
    RrefResult r = rref(m);
    CHECK(rref(r.matrix).matrix == r.matrix);

    SubspaceBasis ns = nullspace(m);
    CHECK(r.matrix.rows() + ns.dimension() == cols);
    for (const auto& x : ns.basis().data()) {
      for (const auto& row : m.data()) CHECK(dot(row, x) == 0);
    }

    RowSpace rs(cols);
    for (const auto& row : m.data()) rs.add(row);
    CHECK(rs.rank() == r.matrix.rows());
    CHECK(SubspaceBasis::span_of(rs.matrix()) == SubspaceBasis::span_of(m));

    RationalMatrix other = random_matrix(rng, rows, cols);
    SubspaceBasis a = SubspaceBasis::span_of(m), b = SubspaceBasis::span_of(other);
    CHECK(subspace_equal(a, b) == (subspace_contains(a, b) && subspace_contains(b, a)));
    CHECK(subspace_equal(a, b) == (a == b));
  }
}
