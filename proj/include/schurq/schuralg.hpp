#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "schurq/combinat.hpp"
#include "schurq/matrix.hpp"

namespace schurq {

using Word = std::vector<int>;  // letters 0..n-1

/// Words I with multiset {(I_t, J_t)} equal to A, i.e. the support of gamma_A e_J.
std::vector<Word> tensor_apply(const MarginMatrix& a, const Word& j);
/// 0^{mu_0} 1^{mu_1} ...
Word canonical_word(const Composition& mu);
/// The matrix with entries A[i][j] = #{t : (I_t, J_t) = (i, j)}.
MarginMatrix pair_matrix(const Word& i, const Word& j, int n);
std::size_t word_index(const Word& w, int n);
Word word_from_index(std::size_t idx, int n, int d);

/// S(n, d) with its basis of standard morphisms gamma_A.
class SchurAlgebra {
 public:
  using Element = Vector;
  using Product = std::vector<std::pair<std::size_t, mpz_class>>;

  SchurAlgebra(int n, int d, Ring ring);

  int n() const { return n_; }
  int d() const { return d_; }
  const Ring& ring() const { return ring_; }
  bool truncated() const { return n_ < d_; }
  const CompositionIndex& weights() const { return weights_; }

  std::size_t dim() const;
  const std::vector<MarginMatrix>& basis() const;
  std::size_t index(const MarginMatrix& a) const;
  /// Range of basis indices with row sums lambda and column sums mu.
  std::pair<std::size_t, std::size_t> block_range(std::size_t lambda_idx, std::size_t mu_idx) const;

  Element zero() const { return Element(dim()); }
  Element basis_element(std::size_t i) const;
  Element unit() const;
  Element xi(const Composition& lambda) const;

  /// Integral structure constants of gamma_a * gamma_b (cached).
  const Product& product_z(std::size_t a, std::size_t b) const;
  Element multiply(const Element& x, const Element& y) const;
  Element transpose(const Element& x) const;

  /// n^d x n^d matrix of the action on tensor space; columns are inputs.
  Matrix tensor_action(const MarginMatrix& a) const;
  Matrix tensor_action(const Element& x) const;
  /// Coordinates of an invariant matrix in the gamma basis; throws if not in the span.
  Element from_tensor(const Matrix& m) const;

  /// Every nonzero product, for export.
  std::vector<std::tuple<std::size_t, std::size_t, Product>> all_products() const;
  void import_products(const std::vector<std::tuple<std::size_t, std::size_t, Product>>& table) const;
  /// Hash of the canonical basis enumeration.
  std::uint64_t basis_hash() const;

 private:
  int n_, d_;
  Ring ring_;
  CompositionIndex weights_;
  struct State;
  std::shared_ptr<State> st_;
  void ensure_basis() const;
  Product compute_product(std::size_t a, std::size_t b) const;
};

}  // namespace schurq
