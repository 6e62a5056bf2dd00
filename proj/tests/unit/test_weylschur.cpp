#include <functional>

#include "doctest.h"
#include "schurq/weylschur.hpp"

using namespace schurq;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);

// Brute force: every nonzero weight vector generates the whole module (F_p, small dims).
bool is_simple_brute_force(const PolyModule& x) {
  const long p = x.ring().characteristic();
  const std::size_t total = x.rank();
  if (total == 0) return false;
  for (std::size_t w = 0; w < x.weights().size(); ++w) {
    std::size_t dim = x.weight_dim(w);
    if (dim == 0) continue;
    Vector v(dim, Scalar(0));
    std::function<bool(std::size_t, bool)> rec = [&](std::size_t i, bool nonzero) {
      if (i == dim) return !nonzero || total_rank(submodule_generated(x, {{w, v}})) == total;
      for (long c = 0; c < p; ++c) {
        v[i] = c;
        if (!rec(i + 1, nonzero || c != 0)) return false;
      }
      v[i] = 0;
      return true;
    };
    if (!rec(0, false)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tableau words") {
  Filling t{{5, 3, 3, 2}, {{1, 2, 2, 3, 3}, {2, 3, 5}, {4, 4, 6}, {5, 6}}};
  REQUIRE(t.is_semistandard());
  CHECK(row_word(t) == Word{0, 1, 1, 2, 2, 1, 2, 4, 3, 3, 5, 4, 5});
  CHECK(column_word(t) == Word{0, 1, 3, 4, 1, 2, 3, 5, 1, 4, 5, 2, 2});
}

TEST_CASE("hook content formula") {
  CHECK(hook_content({2, 1}, 2) == 2);
  CHECK(hook_content({1, 1, 1}, 2) == 0);
  CHECK(hook_content({3}, 2) == 4);
  CHECK(hook_content({2, 2}, 3) == 6);
  for (int d = 1; d <= 6; ++d)
    for (int n = 1; n <= 5; ++n)
      for (const auto& lam : partitions(d))
        CHECK(hook_content(lam, n) == static_cast<std::int64_t>(semistandard_tableaux(lam, n).size()));
}

TEST_CASE("Weyl module examples") {
  for (const Ring& r : {Q, Z, F2}) {
    CHECK(weyl({2, 1}, 2, r).module->rank() == 2);
    CHECK(weyl({1, 1, 1}, 2, r).module->rank() == 0);
    for (int n = 2; n <= 4; ++n) {
      auto w = weyl({1, 1, 1}, n, r);
      CHECK(static_cast<std::int64_t>(w.module->rank()) == binomial(n, 3));
      // lambda' = (3): the ambient is Lambda^3 and the image is everything
      CHECK(contains(w.module->lattices(), full_lattices(*w.ambient)));
    }
  }
}

TEST_CASE("Weyl module ranks match hook content") {
  for (const Ring& r : {Q, F2})
    for (int d = 1; d <= 5; ++d)
      for (int n = 1; n <= 5; ++n) {
        if (d == 5 && n > 3) continue;
        for (const auto& lam : partitions(d)) {
          auto w = weyl(lam, n, r);
          CAPTURE(lam);
          CHECK(static_cast<std::int64_t>(w.module->rank()) == hook_content(lam, n));
          CHECK(w.tableau_basis.size() == w.module->rank());
        }
      }
  for (const auto& lam : partitions(5)) CHECK(static_cast<std::int64_t>(weyl(lam, 3, Z).module->rank()) == hook_content(lam, 3));
}

TEST_CASE("Weyl module cover is an equivariant epimorphism") {
  for (const Ring& r : {Z, F3})
    for (const auto& lam : partitions(3)) {
      auto w = weyl(lam, 3, r);
      CHECK(w.cover.is_equivariant(GeneratorSet::Full));
      CHECK(w.composite.is_equivariant(GeneratorSet::Full));
      CHECK(w.cover.rank() == w.module->rank());
      // tableau vectors are the cover's values on v_T
      std::size_t flat = 0;
      for (std::size_t wi = 0; wi < w.module->weights().size(); ++wi)
        for (std::size_t k = 0; k < w.module->weight_dim(wi); ++k, ++flat) {
          auto [sw, sk] = w.source->locate(row_word(w.tableau_basis[flat]));
          CHECK(sw == wi);
          Vector e(w.module->weight_dim(wi), Scalar(0));
          e[k] = 1;
          CHECK(w.cover.block(wi).col(sk) == e);
        }
    }
}

TEST_CASE("Hom from divided powers into Weyl modules") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& lam : partitions(d)) {
      auto w = weyl(lam, d, Q);
      for (const auto& mu : weight_partitions(d, d)) {
        std::size_t h = d <= 3 ? hom_space(eval_divided(mu, d, Q), w.module).size() : w.module->weight_dim(mu);
        CAPTURE(lam);
        CAPTURE(mu);
        CHECK((h != 0) == dominance_leq(mu, lam));
        if (to_partition(mu) == lam) CHECK(h == 1);
      }
    }
}

TEST_CASE("Schur modules") {
  for (const Ring& r : {Q, Z, F2}) {
    for (int d = 1; d <= 3; ++d) {
      std::vector<int> ones(static_cast<std::size_t>(d), 1);
      auto s1 = schur_module(ones, 3, r);
      auto iso = find_isomorphism(eval_exterior({d}, 3, r), s1, GeneratorSet::Full);
      CHECK(iso.has_value());
      auto sd = schur_construction({d}, 3, r);
      CHECK(contains(sd.module->lattices(), full_lattices(*sd.ambient)));
    }
    CHECK(schur_module({2, 1}, 2, r)->rank() == 2);
  }
  for (const Ring& r : {Z, F2})
    for (int d = 1; d <= 3; ++d)
      for (const auto& lam : partitions(d)) {
        auto w = weyl(lam, 3, r);
        auto s = schur_construction(lam, 3, r);
        CHECK(s.cover.is_equivariant(GeneratorSet::Full));
        CHECK(s.module->rank() == w.module->rank());
        CHECK(find_isomorphism(dual(w.module), s.module).has_value());
      }
}

TEST_CASE("standard objects") {
  CHECK(standard_object({3}, 3, Z).quotient->rank() == eval_divided({3}, 3, Z)->rank());
  CHECK(total_rank(standard_object({3}, 3, Z).U) == 0);
  auto d11 = standard_object({1, 1}, 2, Q);
  CHECK(total_rank(d11.U) == 3);
  CHECK(d11.quotient->rank() == 1);
  CHECK(find_isomorphism(d11.quotient, eval_exterior({2}, 2, Q)).has_value());
  for (const Ring& r : {Z, Q, F2, F3})
    for (int d = 1; d <= 4; ++d) {
      if (d == 4 && r != Z && r != F2) continue;
      for (const auto& lam : partitions(d)) {
        CAPTURE(lam);
        auto delta = standard_object(lam, d, r);  // torsion would throw over Z
        auto w = weyl(lam, d, r);
        auto f = standard_to_weyl(delta, w);
        CHECK(compose(f, delta.canonical_epi) == w.cover);
        if (r == Z)
          for (std::size_t wi = 0; wi < delta.quotient->weights().size(); ++wi)
            for (const auto& e : delta.quotient->frame(wi).invariant_factors()) CHECK(e == 1);
        if (d <= 3) CHECK(hom_space(delta.quotient, delta.quotient).size() == 1);
        CHECK(hom_space(delta.gamma, delta.quotient).size() == 1);
      }
    }
}

TEST_CASE("End of standard objects at d = 4") {
  for (const auto& lam : partitions(4)) {
    auto delta = standard_object(lam, 4, F2);
    CHECK(hom_space(delta.quotient, delta.quotient).size() == 1);
  }
}

TEST_CASE("presentation data") {
  auto p = presentation({2, 1});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].source == Composition{3, 0});
  CHECK(p.relations[0].a == MarginMatrix(2, 2, {2, 0, 1, 0}));
  CHECK(presentation({4}).relations.empty());
  auto p11 = presentation({1, 1});
  REQUIRE(p11.relations.size() == 1);
  CHECK(p11.relations[0].source == Composition{2, 0});
  auto p322 = presentation({3, 2, 2});
  CHECK(p322.relations.size() == 4);
  for (const auto& rel : p322.relations) {
    CHECK(rel.a.row_sums() == Composition{3, 2, 2});
    CHECK(rel.a.col_sums() == rel.source);
    CHECK(!dominance_leq(rel.source, Composition{3, 2, 2}));
  }
}

TEST_CASE("realized presentation") {
  auto r21 = realize_presentation({2, 1}, 2, Q);
  CHECK(r21.p0->rank() == 6);
  CHECK(r21.alpha.rank() == 4);
  CHECK(r21.cokernel->rank() == 2);
  CHECK(realize_presentation({1, 1}, 2, Q).cokernel->rank() == 1);
  CHECK(realize_presentation({3}, 2, Q).cokernel->rank() == 4);
  for (const Ring& r : {Z, F2})
    for (int d = 1; d <= 4; ++d)
      for (const auto& lam : partitions(d)) {
        CAPTURE(lam);
        auto rp = realize_presentation(lam, d, r);
        CHECK(rp.alpha.is_equivariant(GeneratorSet::Auto));
        auto delta = standard_object(lam, d, r);
        for (std::size_t w = 0; w < delta.U.size(); ++w) CHECK(delta.U[w] == image_lattices(rp.alpha)[w]);
        CHECK(static_cast<std::int64_t>(rp.cokernel->rank()) == hook_content(lam, d));
      }
}

TEST_CASE("costandard objects") {
  for (const Ring& r : {Z, Q, F2}) {
    auto n3 = costandard_object({3}, 3, r);
    CHECK(contains(n3.module->lattices(), full_lattices(*n3.symmetric)));
    auto n11 = costandard_object({1, 1}, 2, r);
    CHECK(n11.module->rank() == 1);
    CHECK(find_isomorphism(n11.module, eval_exterior({2}, 2, r)).has_value());
    for (int d = 1; d <= 3; ++d)
      for (const auto& lam : partitions(d)) {
        CAPTURE(lam);
        auto nab = costandard_object(lam, d, r);
        CHECK(nab.module->saturated());
        CHECK(nab.inclusion.is_equivariant(GeneratorSet::Full));
        auto delta = standard_object(lam, d, r);
        CHECK(find_isomorphism(dual(delta.quotient), nab.module).has_value());
        CHECK(find_isomorphism(schur_module(lam, d, r), nab.module).has_value());
        CHECK(hom_space(delta.quotient, nab.module).size() == 1);
        CHECK(hom_space(nab.module, nab.module).size() == 1);
        CHECK(hom_space(nab.module, nab.symmetric).size() == 1);
      }
  }
}

TEST_CASE("simple heads") {
  CHECK_THROWS_AS(simple_head({2}, 2, Z), RingError);
  for (int d = 1; d <= 3; ++d)
    for (const auto& lam : partitions(d)) {
      auto l = simple_head(lam, d, Q);
      CHECK(total_rank(l.radical) == 0);
    }
  for (const Ring& r : {Q, F2, F3}) CHECK(simple_head({1, 1}, 2, r).module->rank() == 1);
  CHECK(simple_head({2}, 2, F2).module->rank() == 2);
  CHECK(simple_head({2}, 2, F3).module->rank() == 3);
  for (const Ring& r : {F2, F3})
    for (int d = 1; d <= 3; ++d) {
      std::vector<std::shared_ptr<const QuotientModule>> simples;
      for (const auto& lam : partitions(d)) {
        CAPTURE(lam);
        auto l = simple_head(lam, d, r);
        CHECK(is_simple_brute_force(*l.module));
        CHECK(find_isomorphism(dual(l.module), l.module).has_value());
        simples.push_back(l.module);
      }
      for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = 0; j < simples.size(); ++j)
          CHECK(hom_space(simples[i], simples[j]).size() == (i == j ? 1u : 0u));
    }
}
