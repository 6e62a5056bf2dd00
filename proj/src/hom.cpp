#include <random>
#include <stdexcept>

#include "schurq/polyfun.hpp"

namespace schurq {

std::vector<ModuleMap> hom_space(ModulePtr x, ModulePtr y, GeneratorSet set) {
  if (x->n() != y->n() || x->d() != y->d() || x->ring() != y->ring())
    throw std::invalid_argument("hom_space: modules over different Schur algebras");
  const Ring& ring = x->ring();
  const auto& wts = x->weights();
  const std::size_t W = wts.size();
  std::vector<std::size_t> off(W + 1, 0);
  for (std::size_t w = 0; w < W; ++w) off[w + 1] = off[w] + y->weight_dim(w) * x->weight_dim(w);

  // Generators grouped by the later of their two weights in processing order.
  std::vector<std::vector<MarginMatrix>> due(W);
  for (auto& a : generators(x->n(), x->d(), set)) {
    std::size_t l = wts.index(a.row_sums()), m = wts.index(a.col_sums());
    if (l == m) continue;
    if (y->weight_dim(l) * x->weight_dim(m) == 0 && y->weight_dim(m) * x->weight_dim(l) == 0) continue;
    due[std::max(l, m)].push_back(std::move(a));
  }

  auto unpack = [&](const Vector& f, std::size_t w) {
    Matrix m(y->weight_dim(w), x->weight_dim(w));
    std::size_t p = off[w];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f[p++];
    return m;
  };

  // Rows of sol span the solutions on the weights processed so far.
  Matrix sol(0, 0);
  for (std::size_t w = 0; w < W; ++w) {
    std::size_t fresh = off[w + 1] - off[w];
    Matrix grown(sol.rows() + fresh, off[w + 1]);
    grown.add_block(0, 0, sol);
    grown.add_block(sol.rows(), off[w], Matrix::identity(fresh));
    sol = std::move(grown);
    if (due[w].empty() || sol.rows() == 0) continue;
    std::vector<Vector> residual_rows(sol.rows());
    for (std::size_t r = 0; r < sol.rows(); ++r) {
      Vector f = sol.row(r);
      Vector& res = residual_rows[r];
      for (const auto& a : due[w]) {
        std::size_t l = wts.index(a.row_sums()), m = wts.index(a.col_sums());
        Matrix lhs = multiply(y->block(a), unpack(f, m), ring);
        Matrix rhs = multiply(unpack(f, l), x->block(a), ring);
        for (std::size_t i = 0; i < lhs.rows(); ++i)
          for (std::size_t j = 0; j < lhs.cols(); ++j) res.push_back(ring.reduce(lhs(i, j) - rhs(i, j)));
      }
    }
    Matrix resid = Matrix::from_rows(residual_rows, residual_rows.empty() ? 0 : residual_rows[0].size());
    if (resid.is_zero()) continue;
    Lattice k = kernel_basis(resid, ring);
    sol = multiply(k.basis(), sol, ring);
  }
  Lattice final_lattice(off[W], sol, ring);
  std::vector<ModuleMap> out;
  for (std::size_t r = 0; r < final_lattice.rank(); ++r) {
    Vector f = final_lattice.basis().row(r);
    std::vector<Matrix> blocks;
    for (std::size_t w = 0; w < W; ++w) blocks.push_back(unpack(f, w));
    out.emplace_back(x, y, std::move(blocks));
  }
  return out;
}

namespace {

Scalar dot(const ModuleMap& f, const ModuleMap& g) {
  Scalar s = 0;
  for (std::size_t w = 0; w < f.blocks().size(); ++w)
    for (std::size_t i = 0; i < f.block(w).rows(); ++i)
      for (std::size_t j = 0; j < f.block(w).cols(); ++j) s += f.block(w)(i, j) * g.block(w)(i, j);
  return s;
}

// Pairwise size reduction of a Z-basis: subtract nearest-integer multiples while norms drop.
std::vector<ModuleMap> size_reduce(std::vector<ModuleMap> b) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        Scalar nj = dot(b[j], b[j]);
        if (nj == 0) continue;
        Scalar q = dot(b[i], b[j]) / nj;
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), mpz_class(2 * q.get_num() + q.get_den()).get_mpz_t(), mpz_class(2 * q.get_den()).get_mpz_t());
        if (k == 0) continue;
        ModuleMap c = add(b[i], scale(b[j], Scalar(-k)));
        if (dot(c, c) < dot(b[i], b[i])) {
          b[i] = std::move(c);
          changed = true;
        }
      }
  }
  return b;
}

}  // namespace

std::optional<ModuleMap> find_isomorphism(const std::vector<ModuleMap>& hom_basis) {
  if (hom_basis.empty()) return std::nullopt;
  const Ring& ring = hom_basis[0].source()->ring();
  std::vector<ModuleMap> basis = ring.kind() == RingKind::Integers ? size_reduce(hom_basis) : hom_basis;
  for (const auto& f : basis)
    if (f.is_iso()) return f;
  Vector c(basis.size(), Scalar(1));
  ModuleMap total = linear_combination(basis, c);
  if (total.is_iso()) return total;
  // Every combination with coefficients -1, 0, 1 when the basis is small.
  if (basis.size() <= 8) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= 3;
    for (std::size_t code = 1; code < count; ++code) {
      std::size_t x = code;
      for (auto& v : c) {
        v = ring.reduce(Scalar(static_cast<long>(x % 3) - 1));
        x /= 3;
      }
      ModuleMap f = linear_combination(basis, c);
      if (f.is_iso()) return f;
    }
  }
  std::mt19937 rng(20240611);
  long span = ring.kind() == RingKind::PrimeField ? ring.characteristic() : 7;
  for (int attempt = 0; attempt < 200; ++attempt) {
    for (auto& v : c) v = ring.reduce(Scalar(static_cast<long>(rng() % static_cast<unsigned long>(span)) - (span > 2 ? span / 2 : 0)));
    ModuleMap f = linear_combination(basis, c);
    if (f.is_iso()) return f;
  }
  return std::nullopt;
}

std::optional<ModuleMap> find_isomorphism(ModulePtr x, ModulePtr y, GeneratorSet set) {
  for (std::size_t w = 0; w < x->weights().size(); ++w)
    if (x->weight_dim(w) != y->weight_dim(w)) return std::nullopt;
  if (x->rank() == 0) return ModuleMap::zero(x, y);
  return find_isomorphism(hom_space(std::move(x), std::move(y), set));
}

}  // namespace schurq
