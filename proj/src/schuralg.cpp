#include "schurq/schuralg.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurq {

std::vector<Word> tensor_apply(const MarginMatrix& a, const Word& j) {
  const int n_out = a.rows, n_in = a.cols;
  std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(n_in));
  for (std::size_t t = 0; t < j.size(); ++t) {
    if (j[t] < 0 || j[t] >= n_in) return {};
    pos[static_cast<std::size_t>(j[t])].push_back(t);
  }
  std::vector<std::vector<int>> multisets(static_cast<std::size_t>(n_in));
  for (int c = 0; c < n_in; ++c) {
    auto& ms = multisets[static_cast<std::size_t>(c)];
    for (int i = 0; i < n_out; ++i)
      for (int k = 0; k < a(i, c); ++k) ms.push_back(i);
    if (ms.size() != pos[static_cast<std::size_t>(c)].size()) return {};
  }
  std::vector<Word> out;
  Word cur(j.size());
  auto rec = [&](auto&& self, int c) -> void {
    if (c == n_in) {
      out.push_back(cur);
      return;
    }
    auto perm = multisets[static_cast<std::size_t>(c)];
    const auto& p = pos[static_cast<std::size_t>(c)];
    do {
      for (std::size_t k = 0; k < p.size(); ++k) cur[p[k]] = perm[k];
      self(self, c + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(rec, 0);
  return out;
}

Word canonical_word(const Composition& mu) {
  Word w;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int k = 0; k < mu[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

MarginMatrix pair_matrix(const Word& i, const Word& j, int n) {
  MarginMatrix m(n, n);
  for (std::size_t t = 0; t < i.size(); ++t) ++m(i[t], j[t]);
  return m;
}

std::size_t word_index(const Word& w, int n) {
  std::size_t idx = 0;
  for (int x : w) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
  return idx;
}

Word word_from_index(std::size_t idx, int n, int d) {
  Word w(static_cast<std::size_t>(d));
  for (int t = d - 1; t >= 0; --t) {
    w[static_cast<std::size_t>(t)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  return w;
}

struct SchurAlgebra::State {
  std::once_flag basis_once;
  std::vector<MarginMatrix> basis;
  std::map<MarginMatrix, std::size_t> index;
  std::vector<std::size_t> block_start;  // indexed by lambda * W + mu, one past the end at W*W
  std::mutex mu;
  std::map<std::pair<std::size_t, std::size_t>, Product> products;
};

SchurAlgebra::SchurAlgebra(int n, int d, Ring ring)
    : n_(n), d_(d), ring_(ring), weights_(n, d), st_(std::make_shared<State>()) {
  if (n < 1 || d < 0) throw std::invalid_argument("SchurAlgebra needs n >= 1, d >= 0");
}

void SchurAlgebra::ensure_basis() const {
  std::call_once(st_->basis_once, [this] {
    const std::size_t W = weights_.size();
    st_->block_start.reserve(W * W + 1);
    for (std::size_t l = 0; l < W; ++l)
      for (std::size_t m = 0; m < W; ++m) {
        st_->block_start.push_back(st_->basis.size());
        for (auto& a : margin_matrices(weights_[l], weights_[m])) {
          st_->index.emplace(a, st_->basis.size());
          st_->basis.push_back(std::move(a));
        }
      }
    st_->block_start.push_back(st_->basis.size());
  });
}

std::size_t SchurAlgebra::dim() const {
  ensure_basis();
  return st_->basis.size();
}

const std::vector<MarginMatrix>& SchurAlgebra::basis() const {
  ensure_basis();
  return st_->basis;
}

std::size_t SchurAlgebra::index(const MarginMatrix& a) const {
  ensure_basis();
  auto it = st_->index.find(a);
  if (it == st_->index.end()) throw std::invalid_argument("matrix is not a basis element of this Schur algebra");
  return it->second;
}

std::pair<std::size_t, std::size_t> SchurAlgebra::block_range(std::size_t l, std::size_t m) const {
  ensure_basis();
  std::size_t k = l * weights_.size() + m;
  return {st_->block_start[k], st_->block_start[k + 1]};
}

SchurAlgebra::Element SchurAlgebra::basis_element(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

SchurAlgebra::Element SchurAlgebra::unit() const {
  Element e = zero();
  for (const auto& l : weights_.all()) e[index(MarginMatrix::diagonal(l))] = 1;
  return e;
}

SchurAlgebra::Element SchurAlgebra::xi(const Composition& lambda) const {
  return basis_element(index(MarginMatrix::diagonal(lambda)));
}

SchurAlgebra::Product SchurAlgebra::compute_product(std::size_t ia, std::size_t ib) const {
  const MarginMatrix& a = basis()[ia];
  const MarginMatrix& b = basis()[ib];
  Product out;
  if (a.col_sums() != b.row_sums()) return out;
  Word j0 = canonical_word(b.col_sums());
  std::map<Word, long> v;
  for (const auto& k : tensor_apply(b, j0))
    for (auto& i : tensor_apply(a, k)) ++v[i];
  // Each gamma_C contributes a constant on its orbit {I : pairs(I, J0) = C}.
  std::map<MarginMatrix, std::pair<long, long>> seen;  // value, count
  for (const auto& [i, c] : v) {
    MarginMatrix cm = pair_matrix(i, j0, n_);
    auto [it, fresh] = seen.emplace(cm, std::make_pair(c, 0L));
    if (!fresh && it->second.first != c)
      throw std::logic_error("product is not a combination of standard basis tensors");
    ++it->second.second;
  }
  for (const auto& [cm, vc] : seen) {
    long orbit = 1;
    Composition mu = cm.col_sums();
    for (int j = 0; j < n_; ++j) {
      orbit *= factorial(mu[static_cast<std::size_t>(j)]);
      for (int i = 0; i < n_; ++i) orbit /= factorial(cm(i, j));
    }
    if (orbit != vc.second) throw std::logic_error("product is not symmetric on a basis orbit");
    out.emplace_back(index(cm), mpz_class(vc.first));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const SchurAlgebra::Product& SchurAlgebra::product_z(std::size_t a, std::size_t b) const {
  {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->products.find({a, b});
    if (it != st_->products.end()) return it->second;
  }
  Product p = compute_product(a, b);
  std::lock_guard<std::mutex> lock(st_->mu);
  return st_->products.emplace(std::make_pair(a, b), std::move(p)).first->second;
}

SchurAlgebra::Element SchurAlgebra::multiply(const Element& x, const Element& y) const {
  Element z = zero();
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      for (const auto& [c, k] : product_z(a, b)) z[c] += x[a] * y[b] * Scalar(k);
    }
  }
  for (auto& v : z) v = ring_.reduce(v);
  return z;
}

SchurAlgebra::Element SchurAlgebra::transpose(const Element& x) const {
  Element z = zero();
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) z[index(basis()[a].transpose())] = x[a];
  return z;
}

Matrix SchurAlgebra::tensor_action(const MarginMatrix& a) const {
  std::size_t N = 1;
  for (int t = 0; t < d_; ++t) N *= static_cast<std::size_t>(n_);
  Matrix m(N, N);
  for (std::size_t col = 0; col < N; ++col)
    for (const auto& i : tensor_apply(a, word_from_index(col, n_, d_))) m(word_index(i, n_), col) = ring_.reduce(1);
  return m;
}

Matrix SchurAlgebra::tensor_action(const Element& x) const {
  std::size_t N = 1;
  for (int t = 0; t < d_; ++t) N *= static_cast<std::size_t>(n_);
  Matrix m(N, N);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) m = add(m, scale(tensor_action(basis()[a]), x[a], ring_), ring_);
  return m;
}

SchurAlgebra::Element SchurAlgebra::from_tensor(const Matrix& m) const {
  Element x = zero();
  std::vector<bool> set(dim(), false);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::size_t k = index(pair_matrix(word_from_index(r, n_, d_), word_from_index(c, n_, d_), n_));
      Scalar v = ring_.reduce(m(r, c));
      if (!set[k]) {
        x[k] = v;
        set[k] = true;
      } else if (x[k] != v) {
        throw std::logic_error("tensor matrix is not in the span of the standard basis");
      }
    }
  return x;
}

std::vector<std::tuple<std::size_t, std::size_t, SchurAlgebra::Product>> SchurAlgebra::all_products() const {
  std::vector<std::tuple<std::size_t, std::size_t, Product>> out;
  const std::size_t W = weights_.size();
  for (std::size_t l = 0; l < W; ++l)
    for (std::size_t m = 0; m < W; ++m)
      for (std::size_t r = 0; r < W; ++r) {
        auto [a0, a1] = block_range(l, m);
        auto [b0, b1] = block_range(m, r);
        for (std::size_t a = a0; a < a1; ++a)
          for (std::size_t b = b0; b < b1; ++b) out.emplace_back(a, b, product_z(a, b));
      }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  return out;
}

void SchurAlgebra::import_products(const std::vector<std::tuple<std::size_t, std::size_t, Product>>& table) const {
  std::lock_guard<std::mutex> lock(st_->mu);
  for (const auto& [a, b, p] : table) st_->products.emplace(std::make_pair(a, b), p);
}

std::uint64_t SchurAlgebra::basis_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n_));
  mix(static_cast<std::uint64_t>(d_));
  for (const auto& a : basis())
    for (int v : a.a) mix(static_cast<std::uint64_t>(v) + 1);
  return h;
}

}  // namespace schurq
