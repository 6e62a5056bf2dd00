#include <random>

#include "doctest.h"
#include "schurq/ringel.hpp"
#include "schurq/weylschur.hpp"

using namespace schurq;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);

// Position in the source tensor of each target tensor factor when block j of mu is cut
// into chunks a_1j, a_2j, ... and block i of lambda is assembled from chunks a_i1, a_i2, ...
std::vector<int> chunk_permutation(const MarginMatrix& a) {
  std::vector<std::vector<int>> start(static_cast<std::size_t>(a.rows), std::vector<int>(static_cast<std::size_t>(a.cols)));
  int pos = 0;
  for (int j = 0; j < a.cols; ++j)
    for (int i = 0; i < a.rows; ++i) {
      start[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pos;
      pos += a(i, j);
    }
  std::vector<int> sigma;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      for (int t = 0; t < a(i, j); ++t) sigma.push_back(start[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + t + 1);
  return sigma;
}

int shuffle_sign(const MarginMatrix& a) {
  auto s = chunk_permutation(a);
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[j] < s[i]) sign = -sign;
  return sign;
}

long fact(int k) { return k <= 1 ? 1 : k * fact(k - 1); }

}  // namespace

TEST_CASE("exterior standard morphisms") {
  for (const auto& lam : compositions(3, 3)) {
    MarginMatrix diag(3, 3);
    for (int i = 0; i < 3; ++i) diag(i, i) = lam[static_cast<std::size_t>(i)];
    auto e = standard_morphism_exterior(diag, 3, Z);
    CHECK(e == ModuleMap::identity(e.source()));
  }
  // Splitting every block completely and multiplying back gives prod a_ij! times the
  // Koszul sign of the chunk shuffle.
  for (const Ring& r : {Z, F3})
    for (int d = 1; d <= 3; ++d)
      for (const auto& mu : compositions(3, d))
        for (const auto& lam : compositions(3, d))
          for (const auto& a : margin_matrices(lam, mu)) {
            long c = 1;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) c *= fact(a(i, j));
            ModuleMap lhs = compose(mult_exterior(lam, 3, r), compose(s_perm(chunk_permutation(a), 3, r), comult_exterior(mu, 3, r)));
            CHECK(lhs == scale(standard_morphism_exterior(a, 3, r), Scalar(c * shuffle_sign(a))));
          }
}

TEST_CASE("lambda tensor on projectives") {
  for (const auto& a : margin_matrices({2, 1}, {1, 2})) {
    auto g = standard_morphism_gamma(a, 2, Z);
    auto coords = gamma_coordinates(g);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0].first == a);
    CHECK(coords[0].second == 1);
    CHECK(lambda_tensor_on_projectives(g) == standard_morphism_exterior(a, 2, Z));
  }
  // Full faithfulness on Lambda(2, 2).
  for (const Ring& r : {Z, F2, Q})
    for (const auto& mu : compositions(2, 2))
      for (const auto& lam : compositions(2, 2)) {
        auto as = margin_matrices(lam, mu);
        auto homs = hom_space(eval_exterior(mu, 2, r), eval_exterior(lam, 2, r), GeneratorSet::Full);
        CHECK(homs.size() == as.size());
        std::vector<ModuleMap> images;
        for (const auto& a : as) images.push_back(lambda_tensor_on_projectives(standard_morphism_gamma(a, 2, r)));
        Matrix m(0, 0), h(0, 0);
        auto flat = [](const ModuleMap& f) {
          Vector v;
          for (const auto& b : f.blocks())
            for (std::size_t i = 0; i < b.rows(); ++i)
              for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
          return v;
        };
        std::size_t width = flat(images.empty() ? homs.front() : images.front()).size();
        m = Matrix(0, width);
        h = Matrix(0, width);
        for (const auto& f : images) m = vstack(m, Matrix::from_rows({flat(f)}, width));
        for (const auto& f : homs) h = vstack(h, Matrix::from_rows({flat(f)}, width));
        CHECK(Lattice(width, m, r) == Lattice(width, h, r));
        CHECK(rank(m, r) == as.size());
      }
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto g = eval_divided(pad({d}, n), n, Z);
      auto l = lambda_tensor_on_projectives(ModuleMap::identity(g));
      CHECK(l.source()->rank() == static_cast<std::size_t>(binomial(n, d)));
    }
}

TEST_CASE("lambda tensor is functorial") {
  auto check_pair = [](const MarginMatrix& a, const MarginMatrix& b, const Ring& r) {
    auto ga = standard_morphism_gamma(a, a.rows, r);
    auto gb = standard_morphism_gamma(b, b.rows, r);
    auto lhs = lambda_tensor_on_projectives(compose(ga, gb));
    auto rhs = compose(lambda_tensor_on_projectives(ga), lambda_tensor_on_projectives(gb));
    CHECK(lhs == rhs);
  };
  for (const Ring& r : {Z, F2})
    for (const auto& mu : compositions(2, 2))
      for (const auto& nu : compositions(2, 2))
        for (const auto& lam : compositions(2, 2))
          for (const auto& b : margin_matrices(nu, mu))
            for (const auto& a : margin_matrices(lam, nu)) check_pair(a, b, r);
  std::mt19937 rng(7);
  auto comps = compositions(3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& mu = comps[rng() % comps.size()];
    const auto& nu = comps[rng() % comps.size()];
    const auto& lam = comps[rng() % comps.size()];
    auto bs = margin_matrices(nu, mu);
    auto as = margin_matrices(lam, nu);
    check_pair(as[rng() % as.size()], bs[rng() % bs.size()], Z);
  }
}

TEST_CASE("lambda tensor of presented objects") {
  auto w2 = lambda_tensor(present_standard({2}, 2, Z));
  CHECK(w2.module->rank() == 1);
  CHECK(find_isomorphism(w2.module, eval_exterior({2, 0}, 2, Z)).has_value());
  auto w11 = lambda_tensor(present_standard({1, 1}, 2, Z));
  CHECK(w11.module->rank() == 3);
  CHECK(find_isomorphism(w11.module, eval_symmetric({2, 0}, 2, Z)).has_value());
  for (const Ring& r : {Z, F2, F3})
    for (int d = 1; d <= 3; ++d)
      for (const auto& lam : partitions(d)) {
        CAPTURE(lam);
        auto p = lambda_tensor(present_projective(pad(lam, 3), 3, r));
        CHECK(p.module->rank() == eval_exterior(pad(lam, 3), 3, r)->rank());
        auto w = lambda_tensor(present_standard(lam, 3, r));
        CHECK(find_isomorphism(w.module, schur_module(conjugate(lam), 3, r)).has_value());
        // exactness on 0 -> U -> Gamma^lambda -> Delta -> 0
        auto so = standard_object(lam, 3, r);
        auto u = std::make_shared<const SubModule>(so.gamma, so.U, "U");
        std::size_t ru = u->rank() == 0 ? 0 : lambda_tensor(present(u)).module->rank();
        CHECK(ru + w.module->rank() == p.module->rank());
      }
  CHECK_THROWS_AS(lambda_tensor(Presented{}), std::invalid_argument);
}

TEST_CASE("characteristic tilting object") {
  auto t = tilting_object(2, 2, Z);
  CHECK(t.pass());
  CHECK(t.rank() == 5);
  for (const Ring& r : {F2, F3, Z}) {
    auto t3 = tilting_object(3, 3, r);
    CHECK(t3.pass());
    for (const auto& row : t3.ext)
      for (const auto& e : row) CHECK(e.is_zero());
    for (const auto& lam : t3.order) {
      auto x = t3.summands[lam];
      auto nd = nabla_filtration(dual(x));
      std::size_t total = 0;
      for (const auto& s : t3.delta[lam].steps) {
        total += s.multiplicity * standard_object(s.lambda, 3, r).quotient->rank();
        std::size_t m = 0;
        for (const auto& u : nd.steps)
          if (u.lambda == s.lambda) m = u.multiplicity;
        CHECK(m == s.multiplicity);
      }
      CHECK(total == x->rank());
    }
  }
  // associativity of the structure constants
  const auto& e = t.endo;
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b)
      for (std::size_t c = 0; c < e.dim(); ++c) {
        if (e.product[a][b].empty() || e.product[b][c].empty()) continue;
        Vector left(e.dim(), Scalar(0)), right(e.dim(), Scalar(0));
        for (std::size_t k = 0; k < e.dim(); ++k) {
          if (e.product[a][b][k] != 0 && !e.product[k][c].empty())
            for (std::size_t m = 0; m < e.dim(); ++m) left[m] += e.product[a][b][k] * e.product[k][c][m];
          if (e.product[b][c][k] != 0 && !e.product[a][k].empty())
            for (std::size_t m = 0; m < e.dim(); ++m) right[m] += e.product[b][c][k] * e.product[a][k][m];
        }
        CHECK(left == right);
      }
  CHECK_THROWS_AS(tilting_object(2, 3, Q), std::invalid_argument);
}

TEST_CASE("Ringel self-duality") {
  auto r = ringel_self_duality_check(2, 2, F2);
  CHECK(r.pass());
  CHECK(r.dim_end_gamma == r.dim_end_lambda);
  for (const auto& [key, m] : r.multiplicities) CHECK(m.first == m.second);
  CHECK(ringel_self_duality_check(1, 1, Q).pass());
  CHECK(ringel_self_duality_check(3, 3, Z).pass());
  CHECK(ringel_self_duality_check(3, 3, F3).pass());
  CHECK(ringel_self_duality_check(3, 2, Q).pass());
}
