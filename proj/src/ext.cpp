#include <stdexcept>

#include "schurq/hwc.hpp"

namespace schurq {

namespace {

// Sum over the words T of part p at weight w of z_T * Y.block(A_T): the value on z of the
// Yoneda maps from that part, as a matrix acting on Y_mu.
Matrix yoneda_eval(const WordModule& part, std::size_t part_offset, const PolyModule& y, std::size_t w,
                   const Vector& z) {
  Composition mu = pad(part.block_sizes(), static_cast<std::size_t>(y.n()));
  Matrix m(y.weight_dim(w), y.weight_dim(mu));
  for (std::size_t k = 0; k < part.weight_dim(w); ++k) {
    const Scalar& c = z[part_offset + k];
    if (c == 0) continue;
    MarginMatrix at = divided_label_matrix(part, part.words(w)[k]);
    m = add(m, scale(y.block(at), c, y.ring()), y.ring());
  }
  return m;
}

std::size_t offset_in(const ModulePtr& sum, std::size_t p, std::size_t w) {
  auto ds = std::dynamic_pointer_cast<const DirectSumModule>(sum);
  if (!ds) throw std::logic_error("expected a direct sum");
  return ds->part_offset(p, w);
}

Vector flatten(const ModuleMap& f) {
  Vector v;
  for (const auto& b : f.blocks())
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
  return v;
}

struct Cover {
  std::vector<WordModulePtr> parts;
  ModulePtr sum;
  ModuleMap map;
};

// Divided powers on a greedy set of weight-vector generators.
Cover cover_by_projectives(ModulePtr x) {
  const Ring& r = x->ring();
  std::vector<std::pair<std::size_t, Vector>> gens;
  GradedLattice got = zero_lattices(*x);
  for (std::size_t w = 0; w < x->weights().size(); ++w)
    for (std::size_t k = 0; k < x->weight_dim(w); ++k) {
      Vector e(x->weight_dim(w), Scalar(0));
      e[k] = 1;
      if (got[w].contains(e)) continue;
      gens.emplace_back(w, e);
      got = submodule_generated(*x, gens);
    }
  Cover c;
  std::vector<ModulePtr> parts;
  std::vector<ModuleMap> maps;
  for (const auto& [w, e] : gens) {
    c.parts.push_back(eval_divided(x->weights()[w], x->n(), r));
    parts.push_back(c.parts.back());
    maps.push_back(yoneda_map(c.parts.back(), x, e));
  }
  if (parts.empty()) {
    c.sum = std::make_shared<const SubModule>(x, zero_lattices(*x), "0");
    c.map = ModuleMap::zero(c.sum, x);
    return c;
  }
  c.sum = direct_sum(parts);
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < x->weights().size(); ++w) {
    Matrix m(x->weight_dim(w), 0);
    for (const auto& f : maps) m = hstack(m, f.block(w));
    blocks.push_back(std::move(m));
  }
  c.map = ModuleMap(c.sum, x, std::move(blocks));
  return c;
}

}  // namespace

std::size_t hom_rank(ModulePtr x, ModulePtr y) {
  if (auto w = std::dynamic_pointer_cast<const WordModule>(x);
      w && w->kind() == BlockKind::Divided && w->other() == 1 && static_cast<int>(w->block_sizes().size()) <= x->n())
    return y->weight_dim(pad(w->block_sizes(), static_cast<std::size_t>(x->n())));
  return hom_space(std::move(x), std::move(y)).size();
}

Lattice hom_from_standard(const Partition& lambda, const PolyModule& y) {
  const int n = y.n();
  const Ring& r = y.ring();
  PresentationData p = presentation(lambda);
  Composition lam = pad(p.lambda, static_cast<std::size_t>(n));
  std::size_t lw = y.weights().index(lam);
  auto gamma = eval_divided(lam, n, r);
  Matrix eqs(0, y.weight_dim(lw));
  for (const auto& rel : p.relations) {
    Composition nu = pad(rel.source, static_cast<std::size_t>(n));
    Matrix m(y.weight_dim(nu), y.weight_dim(lw));
    for (const auto& [word, c] : standard_gamma_apply(rel.a.padded(n, n), n, divided_generator_word(nu)))
      m = add(m, scale(y.block(divided_label_matrix(*gamma, word)), Scalar(c), r), r);
    eqs = vstack(eqs, m);
  }
  if (eqs.rows() == 0) return Lattice::full(y.weight_dim(lw), r);
  return kernel_basis(eqs.transpose(), r);
}

Presented present_standard(const Partition& lambda, int n, const Ring& ring) {
  RealizedPresentation rp = realize_presentation(lambda, n, ring);
  Presented p;
  p.object = rp.cokernel;
  p.p0_parts = {rp.p0};
  p.p0 = direct_sum({rp.p0});
  p.omega = image_lattices(rp.alpha);
  p.p1_parts = rp.summands;
  p.p1 = rp.p1;
  p.relations = ModuleMap(p.p1, p.p0, rp.alpha.blocks());
  return p;
}

Presented present_projective(const Composition& mu, int n, const Ring& ring) {
  Presented p;
  auto g = eval_divided(mu, n, ring);
  p.object = g;
  p.p0_parts = {g};
  p.p0 = direct_sum({g});
  p.omega = zero_lattices(*p.p0);
  p.p1 = std::make_shared<const SubModule>(p.p0, p.omega, "0");
  p.relations = ModuleMap::zero(p.p1, p.p0);
  return p;
}

Presented present(ModulePtr x) {
  Presented p;
  p.object = x;
  Cover c0 = cover_by_projectives(x);
  p.p0_parts = c0.parts;
  p.p0 = c0.sum;
  if (c0.parts.empty()) {
    p.omega = zero_lattices(*p.p0);
    p.p1 = p.p0;
    p.relations = ModuleMap::zero(p.p1, p.p0);
    return p;
  }
  p.omega = kernel_lattices(c0.map);
  auto syzygy = std::make_shared<const SubModule>(p.p0, p.omega, "Omega");
  Cover c1 = cover_by_projectives(syzygy);
  p.p1_parts = c1.parts;
  p.p1 = c1.sum;
  p.relations = compose(inclusion(syzygy), c1.map);
  return p;
}

Ext1Value ext1(const Presented& x, ModulePtr y, ExtRoute route) {
  const Ring& r = y->ring();
  const int n = y->n();
  const std::size_t W = y->weights().size();
  if (total_rank(x.omega) == 0) return {};

  // Restrictions of Hom(P0, Y) along the relations, in the coordinates of the route.
  if (route == ExtRoute::Presentation) {
    if (x.p1_parts.empty()) throw std::invalid_argument("ext1: presentation has no relations module");
    // Unknowns: for each P1 part j, a vector in Y_{nu_j}.
    std::vector<std::size_t> start{0};
    for (const auto& part : x.p1_parts) start.push_back(start.back() + y->weight_dim(pad(part->block_sizes(), n)));
    const std::size_t N = start.back();
    std::vector<Vector> cols;  // each a column of the constraint matrix (length N)
    GradedLattice k = kernel_lattices(x.relations);
    for (std::size_t w = 0; w < W; ++w) {
      for (std::size_t zi = 0; zi < k[w].rank(); ++zi) {
        Vector z = k[w].basis().row(zi);
        Matrix total(y->weight_dim(w), N);
        for (std::size_t j = 0; j < x.p1_parts.size(); ++j) {
          Matrix m = yoneda_eval(*x.p1_parts[j], offset_in(x.p1, j, w), *y, w, z);
          total.add_block(0, start[j], m);
        }
        for (std::size_t i = 0; i < total.rows(); ++i) cols.push_back(total.row(i));
      }
    }
    Lattice sol = cols.empty() ? Lattice::full(N, r) : kernel_basis(Matrix::from_rows(cols, N).transpose(), r);
    // Image of Hom(P0, Y): y in Y_{mu_i} gives c_j = value of y after the relation on gen_{nu_j}.
    std::vector<Vector> images;
    for (std::size_t i = 0; i < x.p0_parts.size(); ++i) {
      Composition mu = pad(x.p0_parts[i]->block_sizes(), n);
      for (std::size_t kk = 0; kk < y->weight_dim(mu); ++kk) {
        Vector c(N, Scalar(0));
        for (std::size_t j = 0; j < x.p1_parts.size(); ++j) {
          Composition nu = pad(x.p1_parts[j]->block_sizes(), n);
          std::size_t nw = y->weights().index(nu);
          auto [gw, gk] = x.p1_parts[j]->locate(divided_generator_word(nu));
          Vector z = x.relations.block(nw).col(offset_in(x.p1, j, gw) + gk);
          Matrix m = yoneda_eval(*x.p0_parts[i], offset_in(x.p0, i, nw), *y, nw, z);
          for (std::size_t t = 0; t < m.rows(); ++t) c[start[j] + t] = m(t, kk);
        }
        images.push_back(std::move(c));
      }
    }
    std::vector<Vector> coords;
    for (const auto& v : images) {
      auto c = sol.coordinates(v);
      if (!c) throw std::logic_error("ext1: restricted map does not vanish on relations of relations");
      coords.push_back(*c);
    }
    return {quotient_presentation(sol.rank(), Lattice(sol.rank(), Matrix::from_rows(coords, sol.rank()), r))};
  }

  auto syzygy = std::make_shared<const SubModule>(x.p0, x.omega, "Omega");
  auto homs = hom_space(syzygy, y);
  std::vector<Vector> rows;
  for (const auto& f : homs) rows.push_back(flatten(f));
  std::size_t flat = 0;
  for (std::size_t w = 0; w < W; ++w) flat += y->weight_dim(w) * syzygy->weight_dim(w);
  Lattice homl(flat, Matrix::from_rows(rows, flat), r);
  ModuleMap inc = inclusion(syzygy);
  std::vector<Vector> coords;
  for (std::size_t i = 0; i < x.p0_parts.size(); ++i) {
    Composition mu = pad(x.p0_parts[i]->block_sizes(), n);
    for (std::size_t kk = 0; kk < y->weight_dim(mu); ++kk) {
      std::vector<Matrix> blocks;
      for (std::size_t w = 0; w < W; ++w) {
        Matrix g(y->weight_dim(w), x.p0->weight_dim(w));
        Vector e(y->weight_dim(mu), Scalar(0));
        e[kk] = 1;
        ModuleMap part = yoneda_map(x.p0_parts[i], y, e);
        g.add_block(0, offset_in(x.p0, i, w), part.block(w));
        blocks.push_back(multiply(g, inc.block(w), r));
      }
      auto c = homl.coordinates(flatten(ModuleMap(syzygy, y, std::move(blocks))));
      if (!c) throw std::logic_error("ext1: restriction is not a morphism");
      coords.push_back(*c);
    }
  }
  return {quotient_presentation(homl.rank(), Lattice(homl.rank(), Matrix::from_rows(coords, homl.rank()), r))};
}

std::string format_presentation(const FGModulePresentation& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string base = ring.kind() == RingKind::Integers ? "Z" : ring.name();
  std::string s;
  if (p.free_rank) s = base + (p.free_rank > 1 ? "^" + std::to_string(p.free_rank) : "");
  for (const auto& f : p.invariant_factors) s += (s.empty() ? "" : " + ") + std::string("Z/") + f.get_str();
  return s;
}

}  // namespace schurq
