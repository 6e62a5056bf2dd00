#include <stdexcept>

#include "schurq/ringel.hpp"
#include "schurq/weylschur.hpp"

namespace schurq {

namespace {

WordModulePtr as_word(const ModulePtr& m, BlockKind kind, const char* what) {
  auto w = std::dynamic_pointer_cast<const WordModule>(m);
  if (!w || w->kind() != kind) throw std::invalid_argument(std::string(what) + ": unexpected module type");
  return w;
}

std::size_t part_offset(const ModulePtr& sum, std::size_t p, std::size_t w) {
  auto ds = std::dynamic_pointer_cast<const DirectSumModule>(sum);
  if (!ds) throw std::logic_error("expected a direct sum");
  return ds->part_offset(p, w);
}

// Coefficients on the gamma_A basis of the map Gamma^mu -> Gamma^lambda sending gen_mu to y.
std::vector<std::pair<MarginMatrix, Scalar>> coordinates_of(const WordModule& gamma_lambda, std::size_t mw,
                                                             const Vector& y) {
  std::vector<std::pair<MarginMatrix, Scalar>> out;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (y[k] != 0) out.emplace_back(divided_label_matrix(gamma_lambda, gamma_lambda.words(mw)[k]).transpose(), y[k]);
  return out;
}

Matrix exterior_image(const std::vector<std::pair<MarginMatrix, Scalar>>& coords, WordModulePtr src,
                      WordModulePtr dst, std::size_t w) {
  const Ring& r = src->ring();
  Matrix m(dst->weight_dim(w), src->weight_dim(w));
  for (const auto& [a, c] : coords) m = add(m, scale(standard_morphism_exterior(a, src, dst).block(w), c, r), r);
  return m;
}

Vector flat(const ModuleMap& f) {
  Vector v;
  for (const auto& b : f.blocks())
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
  return v;
}

Matrix flat_rows(const std::vector<ModuleMap>& maps, std::size_t width) {
  Matrix m(0, width);
  for (const auto& f : maps) m = vstack(m, Matrix::from_rows({flat(f)}, width));
  return m;
}

std::string pair_name(const Partition& a, const Partition& b) { return format_parts(a) + " -> " + format_parts(b); }

}  // namespace

std::vector<std::pair<MarginMatrix, Scalar>> gamma_coordinates(const ModuleMap& f) {
  auto src = as_word(f.source(), BlockKind::Divided, "gamma_coordinates");
  auto dst = as_word(f.target(), BlockKind::Divided, "gamma_coordinates");
  const Composition& mu = src->block_sizes();
  std::size_t mw = src->weights().index(mu);
  std::size_t gen = src->locate(divided_generator_word(mu)).second;
  return coordinates_of(*dst, mw, f.block(mw).col(gen));
}

ModuleMap lambda_tensor_on_projectives(const ModuleMap& f) {
  auto src = as_word(f.source(), BlockKind::Divided, "lambda_tensor_on_projectives");
  auto dst = as_word(f.target(), BlockKind::Divided, "lambda_tensor_on_projectives");
  auto ls = eval_exterior(src->block_sizes(), src->n(), src->ring());
  auto ld = eval_exterior(dst->block_sizes(), dst->n(), dst->ring());
  auto coords = gamma_coordinates(f);
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < ls->weights().size(); ++w) blocks.push_back(exterior_image(coords, ls, ld, w));
  return ModuleMap(ls, ld, std::move(blocks));
}

LambdaTensor lambda_tensor(const Presented& x) {
  if (x.p0_parts.empty() || !x.p0) throw std::invalid_argument("lambda_tensor: missing presentation");
  const int n = x.p0->n();
  const Ring& r = x.p0->ring();
  std::vector<WordModulePtr> l0, l1;
  std::vector<ModulePtr> m0, m1;
  for (const auto& p : x.p0_parts) {
    l0.push_back(eval_exterior(p->block_sizes(), n, r));
    m0.push_back(l0.back());
  }
  for (const auto& p : x.p1_parts) {
    l1.push_back(eval_exterior(p->block_sizes(), n, r));
    m1.push_back(l1.back());
  }
  LambdaTensor out;
  out.p0 = direct_sum(m0);
  if (m1.empty()) {
    out.p1 = std::make_shared<const SubModule>(out.p0, zero_lattices(*out.p0), "0");
    out.relations = ModuleMap::zero(out.p1, out.p0);
    out.module = std::make_shared<const QuotientModule>(out.p0, zero_lattices(*out.p0), "Lambda(x)X");
    return out;
  }
  out.p1 = direct_sum(m1);
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < out.p0->weights().size(); ++w) blocks.emplace_back(out.p0->weight_dim(w), out.p1->weight_dim(w));
  for (std::size_t i = 0; i < x.p1_parts.size(); ++i) {
    const Composition& nu = x.p1_parts[i]->block_sizes();
    std::size_t nw = x.p1->weights().index(nu);
    std::size_t col = part_offset(x.p1, i, nw) + x.p1_parts[i]->locate(divided_generator_word(nu)).second;
    for (std::size_t j = 0; j < x.p0_parts.size(); ++j) {
      std::size_t row0 = part_offset(x.p0, j, nw);
      Vector y(x.p0_parts[j]->weight_dim(nw));
      for (std::size_t k = 0; k < y.size(); ++k) y[k] = x.relations.block(nw)(row0 + k, col);
      auto coords = coordinates_of(*x.p0_parts[j], nw, y);
      if (coords.empty()) continue;
      for (std::size_t w = 0; w < blocks.size(); ++w) {
        Matrix m = exterior_image(coords, l1[i], l0[j], w);
        for (std::size_t a = 0; a < m.rows(); ++a)
          for (std::size_t b = 0; b < m.cols(); ++b)
            blocks[w](part_offset(out.p0, j, w) + a, part_offset(out.p1, i, w) + b) = m(a, b);
      }
    }
  }
  out.relations = ModuleMap(out.p1, out.p0, std::move(blocks));
  out.module = std::make_shared<const QuotientModule>(out.p0, image_lattices(out.relations), "Lambda(x)X");
  return out;
}

EndAlgebra end_algebra(const std::vector<ModulePtr>& summands) {
  EndAlgebra e;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> index;
  for (std::size_t j = 0; j < summands.size(); ++j)
    for (std::size_t i = 0; i < summands.size(); ++i)
      for (auto& f : hom_space(summands[j], summands[i])) {
        index[{j, i}].push_back(e.basis.size());
        e.basis.push_back({j, i, std::move(f)});
      }
  e.product.assign(e.dim(), std::vector<Vector>(e.dim()));
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b) {
      if (e.basis[a].from != e.basis[b].to) continue;
      ModuleMap c = compose(e.basis[a].map, e.basis[b].map);
      const auto& ids = index[{e.basis[b].from, e.basis[a].to}];
      Vector coords(e.dim(), Scalar(0));
      Vector v = flat(c);
      if (!ids.empty()) {
        std::vector<ModuleMap> maps;
        for (auto id : ids) maps.push_back(e.basis[id].map);
        Frame fr(flat_rows(maps, v.size()), c.source()->ring());
        Vector local = fr.sub_coordinates(v);
        for (std::size_t t = 0; t < ids.size(); ++t) coords[ids[t]] = local[t];
      } else if (!c.is_zero()) {
        throw std::logic_error("end_algebra: composite outside the Hom basis");
      }
      e.product[a][b] = std::move(coords);
    }
  return e;
}

std::size_t TiltingObject::rank() const {
  std::size_t r = 0;
  for (const auto& [lam, m] : summands) r += m->rank();
  return r;
}

TiltingObject tilting_object(int n, int d, const Ring& ring) {
  if (n < d) throw std::invalid_argument("tilting_object: needs n >= d");
  TiltingObject t;
  t.n = n;
  t.d = d;
  t.ring = ring;
  t.order = partitions(d);
  std::vector<ModulePtr> parts;
  for (const auto& lam : t.order) {
    auto m = eval_exterior(pad(lam, n), n, ring);
    t.summands[lam] = m;
    parts.push_back(m);
    auto df = delta_filtration(m);
    auto nf = nabla_filtration(m);
    bool dv = df.complete, nv = nf.complete;
    for (const auto& s : df.steps) dv = dv && s.verified;
    for (const auto& s : nf.steps) nv = nv && s.verified;
    if (!dv) t.failures.push_back("delta filtration of Lambda^" + format_parts(lam) + ": " + df.failure);
    if (!nv) t.failures.push_back("nabla filtration of Lambda^" + format_parts(lam) + ": " + nf.failure);
    t.delta[lam] = std::move(df);
    t.nabla[lam] = std::move(nf);
  }
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    auto pi = present(parts[i]);
    t.ext.emplace_back();
    for (std::size_t j = 0; j < t.order.size(); ++j) {
      t.ext[i].push_back(ext1(pi, parts[j]));
      if (!t.ext[i][j].is_zero())
        t.failures.push_back("Ext^1 nonzero: " + pair_name(t.order[i], t.order[j]));
    }
  }
  t.endo = end_algebra(parts);
  return t;
}

RingelReport ringel_self_duality_check(int n, int d, const Ring& ring) {
  if (n < d) throw std::invalid_argument("ringel_self_duality_check: needs n >= d");
  RingelReport rep;
  rep.n = n;
  rep.d = d;
  rep.ring = ring;
  auto parts = partitions(d);
  std::map<Partition, WordModulePtr> gam, ext;
  for (const auto& p : parts) {
    gam[p] = eval_divided(pad(p, n), n, ring);
    ext[p] = eval_exterior(pad(p, n), n, ring);
  }
  // Basis gamma_A of each Hom(Gamma^mu, Gamma^lambda) and its exterior image.
  std::map<std::pair<Partition, Partition>, std::vector<ModuleMap>> g_basis, e_basis;
  rep.bijective = true;
  for (const auto& mu : parts)
    for (const auto& lam : parts) {
      auto& gb = g_basis[{mu, lam}];
      auto& eb = e_basis[{mu, lam}];
      for (const auto& a : margin_matrices(pad(lam, n), pad(mu, n))) {
        gb.push_back(standard_morphism_gamma(a, gam[mu], gam[lam]));
        eb.push_back(lambda_tensor_on_projectives(gb.back()));
      }
      auto homs = hom_space(ext[mu], ext[lam]);
      rep.dim_end_gamma += gb.size();
      rep.dim_end_lambda += homs.size();
      std::size_t width = 0;
      for (std::size_t w = 0; w < ext[mu]->weights().size(); ++w) width += ext[mu]->weight_dim(w) * ext[lam]->weight_dim(w);
      Matrix images = flat_rows(eb, width);
      bool ok = homs.size() == gb.size() && rank(images, ring) == gb.size() &&
                Lattice(width, images, ring) == Lattice(width, flat_rows(homs, width), ring);
      if (!ok) {
        rep.bijective = false;
        rep.failures.push_back("not a basis of Hom(Lambda^mu, Lambda^lambda): " + pair_name(mu, lam));
      }
    }
  rep.multiplicative = true;
  for (const auto& mu : parts)
    for (const auto& nu : parts)
      for (const auto& lam : parts) {
        const auto& g1 = g_basis[{mu, nu}];
        const auto& g2 = g_basis[{nu, lam}];
        const auto& e1 = e_basis[{mu, nu}];
        const auto& e2 = e_basis[{nu, lam}];
        for (std::size_t b = 0; b < g1.size(); ++b)
          for (std::size_t a = 0; a < g2.size(); ++a) {
            ++rep.pairs_checked;
            if (!(lambda_tensor_on_projectives(compose(g2[a], g1[b])) == compose(e2[a], e1[b]))) {
              if (rep.multiplicative)
                rep.failures.push_back("composition not preserved: " + pair_name(mu, nu) + " -> " + format_parts(lam));
              rep.multiplicative = false;
            }
          }
      }
  rep.standard_correspondence = true;
  for (const auto& mu : parts) {
    auto df = delta_filtration(gam[mu]);
    auto nf = nabla_filtration(ext[mu]);
    if (!df.complete || !nf.complete) {
      rep.standard_correspondence = false;
      rep.failures.push_back("filtration failed for " + format_parts(mu));
      continue;
    }
    for (const auto& lam : parts) {
      std::size_t dm = 0, nm = 0;
      for (const auto& s : df.steps)
        if (s.lambda == lam) dm += s.multiplicity;
      for (const auto& s : nf.steps)
        if (s.lambda == conjugate(lam)) nm += s.multiplicity;
      rep.multiplicities[{mu, lam}] = {dm, nm};
      if (dm != nm) {
        rep.standard_correspondence = false;
        rep.failures.push_back("Delta/nabla multiplicity mismatch: " + pair_name(mu, lam));
      }
    }
  }
  return rep;
}

}  // namespace schurq
