#include <random>

#include "doctest.h"
#include "schurq/exactla.hpp"

using namespace schurq;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, const Ring& ring) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.reduce(Scalar(dist(rng)));
  return m;
}

const Ring kRings[] = {Ring::integers(), Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)};

}  // namespace

TEST_CASE("ring parsing and residues") {
  CHECK(Ring::parse("Z") == Ring::integers());
  CHECK(Ring::parse("Fp:5") == Ring::prime_field(5));
  CHECK(Ring::parse("F2") == Ring::prime_field(2));
  CHECK_THROWS_AS(Ring::parse("Fp:4"), RingError);
  CHECK_THROWS_AS(Ring::parse("R"), RingError);
  Ring f5 = Ring::prime_field(5);
  CHECK(f5.reduce(Scalar(-1)) == 4);
  CHECK(f5.reduce(Scalar(1, 2)) == 3);
  CHECK(f5.format(Scalar(7)) == "2");
  CHECK(Ring::rationals().format(Scalar(-3, 4)) == "-3/4");
}

TEST_CASE("snf examples") {
  Ring z = Ring::integers();
  auto f = snf(Matrix::identity(3), z);
  CHECK(f.S == Matrix::identity(3));
  CHECK(f.U == Matrix::identity(3));
  CHECK(f.V == Matrix::identity(3));

  f = snf(Matrix{{2, 4}, {6, 8}}, z);
  CHECK(f.S == Matrix{{2, 0}, {0, 4}});
  CHECK(multiply(multiply(f.U, Matrix{{2, 4}, {6, 8}}, z), f.V, z) == f.S);

  f = snf(Matrix(2, 3), z);
  CHECK(f.S.is_zero());
  CHECK(f.U == Matrix::identity(2));
  CHECK(f.V == Matrix::identity(3));
}

TEST_CASE("snf property: UMV = S, unimodular, divisibility") {
  std::mt19937 rng(7);
  for (const Ring& ring : kRings)
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Matrix m = random_matrix(rng, r, c, -6, 6, ring);
      auto f = snf(m, ring);
      CHECK(multiply(multiply(f.U, m, ring), f.V, ring) == f.S);
      CHECK(ring.is_unit(determinant(f.U, ring)));
      CHECK(ring.is_unit(determinant(f.V, ring)));
      CHECK(multiply(f.V, f.Vinv, ring) == Matrix::identity(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j) CHECK(f.S(i, j) == 0);
      auto d = f.diagonal();
      for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(ring.divides(d[i], d[i + 1]));
      CHECK(f.rank == rank(m, ring));
    }
}

TEST_CASE("kernel examples") {
  for (const Ring& ring : kRings) {
    CHECK(kernel_basis(Matrix{{1, 1}, {0, 1}}, ring).rank() == 0);
    Lattice k = kernel_basis(Matrix{{1}, {1}}, ring);
    REQUIRE(k.rank() == 1);
    CHECK(k.contains(Vector{Scalar(1), Scalar(-1)}));
    CHECK(kernel_basis(Matrix(3, 2), ring).rank() == 3);
  }
}

TEST_CASE("kernel property: xM = 0 and rank-nullity") {
  std::mt19937 rng(11);
  for (const Ring& ring : kRings)
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 4;
      Matrix m = random_matrix(rng, r, c, -3, 3, ring);
      Lattice k = kernel_basis(m, ring);
      CHECK(multiply(k.basis(), m, ring).is_zero());
      CHECK(k.rank() + rank(m, ring) == r);
      CHECK(saturation(k) == k);
    }
}

TEST_CASE("quotient presentations") {
  Ring z = Ring::integers();
  CHECK(quotient_presentation(3, Lattice::zero(3, z)).free_rank == 3);
  auto p = quotient_presentation(2, Lattice(2, Matrix{{2, 0}}, z));
  CHECK(p.free_rank == 1);
  REQUIRE(p.invariant_factors.size() == 1);
  CHECK(p.invariant_factors[0] == 2);
  Ring f3 = Ring::prime_field(3);
  p = quotient_presentation(4, Lattice(4, Matrix{{1, 2, 0, 0}, {0, 0, 1, 1}}, f3));
  CHECK(p.free_rank == 2);
  CHECK(p.invariant_factors.empty());
  // Basis change does not alter the answer.
  Lattice a(3, Matrix{{2, 4, 0}, {0, 6, 3}}, z);
  Lattice b(3, Matrix{{2, 10, 3}, {2, 4, 0}}, z);
  CHECK(a == b);
  CHECK(quotient_presentation(3, a) == quotient_presentation(3, b));
}

TEST_CASE("lattice sum, membership, intersection") {
  Ring z = Ring::integers(), q = Ring::rationals();
  Lattice a(2, Matrix{{2, 0}}, z);
  CHECK(lattice_sum(a, Lattice::zero(2, z)) == a);
  Lattice s = lattice_sum(a, Lattice(2, Matrix{{0, 3}}, z));
  CHECK(s.basis() == Matrix{{2, 0}, {0, 3}});
  CHECK_FALSE(lattice_membership(Vector{Scalar(1), Scalar(0)}, a));
  CHECK(lattice_membership(Vector{Scalar(1), Scalar(0)}, Lattice(2, Matrix{{2, 0}}, q)));
  Lattice i = lattice_intersection(Lattice(2, Matrix{{2, 0}, {0, 1}}, z), Lattice(2, Matrix{{3, 0}, {0, 2}}, z));
  CHECK(i.basis() == Matrix{{6, 0}, {0, 2}});
  CHECK(annihilator(Lattice(3, Matrix{{1, 1, 0}}, z)).rank() == 2);
  CHECK(saturation(a).basis() == Matrix{{1, 0}});
}

TEST_CASE("canonical forms are idempotent") {
  std::mt19937 rng(3);
  for (const Ring& ring : kRings)
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -9, 9, ring);
      Matrix c = row_canonical(m, ring);
      CHECK(row_canonical(c, ring) == c);
    }
}

TEST_CASE("frame coordinates") {
  Ring z = Ring::integers();
  Matrix b{{1, 2, 3}, {0, 1, 1}};
  Frame f(b, z);
  CHECK(f.torsion_free());
  CHECK(f.quotient_rank() == 1);
  Vector x = vec_mul(Vector{Scalar(3), Scalar(-2)}, b, z);
  CHECK(f.sub_coordinates(x) == Vector{Scalar(3), Scalar(-2)});
  CHECK(f.quotient_coordinates(x) == Vector{Scalar(0)});
  // lift then project is the identity on the quotient
  CHECK(multiply(f.lift(), f.proj(), z) == Matrix::identity(1));
  Frame g(Matrix{{2, 0}}, z);
  CHECK_FALSE(g.torsion_free());
}
