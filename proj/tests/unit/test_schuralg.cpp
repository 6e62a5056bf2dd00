#include <random>

#include "doctest.h"
#include "schurq/exactla.hpp"
#include "schurq/schuralg.hpp"

using namespace schurq;

TEST_CASE("dimension") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      CHECK(static_cast<std::int64_t>(SchurAlgebra(n, d, Ring::rationals()).dim()) == binomial(n * n + d - 1, d));
  CHECK(SchurAlgebra(2, 2, Ring::rationals()).dim() == 10);
}

TEST_CASE("tensor action examples") {
  Ring q = Ring::rationals();
  SchurAlgebra s1(1, 3, q);
  CHECK(s1.tensor_action(MarginMatrix(1, 1, {3})) == Matrix::identity(1));
  SchurAlgebra s(2, 1, q);
  CHECK(s.tensor_action(MarginMatrix(2, 2, {0, 1, 0, 0})) == Matrix{{0, 1}, {0, 0}});
  SchurAlgebra s2(2, 2, q);
  Matrix m = s2.tensor_action(MarginMatrix::diagonal({1, 1}));
  // e11 (x) e22 + e22 (x) e11 on basis 00, 01, 10, 11
  CHECK(m == Matrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
  CHECK(rank(m, q) == 2);
}

TEST_CASE("idempotents and unit, n=d=2") {
  Ring q = Ring::rationals();
  SchurAlgebra s(2, 2, q);
  for (const auto& l : s.weights().all())
    for (const auto& m : s.weights().all()) {
      auto p = s.multiply(s.xi(l), s.xi(m));
      CHECK(p == (l == m ? s.xi(l) : s.zero()));
    }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    CHECK(s.multiply(s.unit(), s.basis_element(i)) == s.basis_element(i));
    CHECK(s.multiply(s.basis_element(i), s.unit()) == s.basis_element(i));
  }
  CHECK(s.tensor_action(s.unit()) == Matrix::identity(4));
}

TEST_CASE("associativity and transpose, n=d=2 exhaustive") {
  Ring z = Ring::integers();
  SchurAlgebra s(2, 2, z);
  const std::size_t D = s.dim();
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b) {
      auto ab = s.multiply(s.basis_element(a), s.basis_element(b));
      CHECK(s.transpose(ab) == s.multiply(s.transpose(s.basis_element(b)), s.transpose(s.basis_element(a))));
      CHECK(s.tensor_action(ab) == multiply(s.tensor_action(s.basis()[a]), s.tensor_action(s.basis()[b]), z));
      for (std::size_t c = 0; c < D; ++c)
        CHECK(s.multiply(ab, s.basis_element(c)) ==
              s.multiply(s.basis_element(a), s.multiply(s.basis_element(b), s.basis_element(c))));
    }
  for (std::size_t a = 0; a < D; ++a) CHECK(s.transpose(s.transpose(s.basis_element(a))) == s.basis_element(a));
  for (const auto& l : s.weights().all()) CHECK(s.transpose(s.xi(l)) == s.xi(l));
}

TEST_CASE("random associativity, n=d=3") {
  Ring q = Ring::rationals();
  SchurAlgebra s(3, 3, q);
  std::mt19937 rng(5);
  auto rand_elem = [&] {
    auto x = s.zero();
    for (int k = 0; k < 4; ++k) x[rng() % s.dim()] = Scalar(static_cast<long>(rng() % 7) - 3);
    return x;
  };
  for (int t = 0; t < 15; ++t) {
    auto x = rand_elem(), y = rand_elem(), w = rand_elem();
    CHECK(s.multiply(s.multiply(x, y), w) == s.multiply(x, s.multiply(y, w)));
    CHECK(s.tensor_action(s.multiply(x, y)) == multiply(s.tensor_action(x), s.tensor_action(y), q));
    CHECK(s.from_tensor(s.tensor_action(x)) == x);
  }
}

TEST_CASE("structure constants reduce to a direct F_p computation") {
  for (long p : {2L, 3L}) {
    Ring fp = Ring::prime_field(p);
    SchurAlgebra s(2, 3, fp);
    for (std::size_t a = 0; a < s.dim(); a += 3)
      for (std::size_t b = 0; b < s.dim(); b += 2) {
        auto direct = s.from_tensor(multiply(s.tensor_action(s.basis()[a]), s.tensor_action(s.basis()[b]), fp));
        CHECK(s.multiply(s.basis_element(a), s.basis_element(b)) == direct);
      }
  }
}

TEST_CASE("re-expression rejects non-invariant matrices") {
  SchurAlgebra s(2, 2, Ring::rationals());
  Matrix m(4, 4);
  m(1, 1) = 1;  // e11 (x) e22 alone is not symmetric
  CHECK_THROWS_AS(s.from_tensor(m), std::logic_error);
}
