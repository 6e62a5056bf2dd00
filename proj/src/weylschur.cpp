#include "schurq/weylschur.hpp"

#include <stdexcept>

namespace schurq {

namespace {

std::string tag(const char* prefix, const Partition& lambda) { return prefix + format_parts(lambda); }

WordModulePtr as_words(const ModulePtr& m) {
  auto w = std::dynamic_pointer_cast<const WordModule>(m);
  if (!w) throw std::logic_error("expected a word module");
  return w;
}

// Collects images of the given source words as the weight bases of a submodule.
WeylConstruction assemble(const Partition& lambda, int n, const ModuleMap& composite, bool rows, std::string name) {
  WeylConstruction c;
  c.lambda = lambda;
  c.n = n;
  c.source = as_words(composite.source());
  c.ambient = as_words(composite.target());
  c.composite = composite;
  const Ring& r = c.ambient->ring();
  const std::size_t W = c.ambient->weights().size();
  std::vector<std::vector<Vector>> vecs(W);
  std::vector<std::vector<Filling>> tabs(W);
  if (static_cast<int>(lambda.size()) <= n) {
    for (const auto& t : semistandard_tableaux(lambda, n)) {
      Word word = rows ? row_word(t) : column_word(t);
      auto [w, k] = c.source->locate(word);
      vecs[w].push_back(composite.block(w).col(k));
      tabs[w].push_back(t);
    }
  }
  std::vector<Matrix> bases;
  for (std::size_t w = 0; w < W; ++w) {
    Matrix b = Matrix::from_rows(vecs[w], c.ambient->weight_dim(w));
    if (rank(b, r) != b.rows()) throw std::logic_error(name + ": tableau images are dependent");
    bases.push_back(std::move(b));
    for (auto& t : tabs[w]) c.tableau_basis.push_back(std::move(t));
  }
  c.module = std::make_shared<const SubModule>(c.ambient, std::move(bases), std::move(name));
  c.cover = corestrict(composite, c.module);
  return c;
}

}  // namespace

Word row_word(const Filling& t) {
  Word w;
  for (const auto& row : t.rows)
    for (int e : row) w.push_back(e - 1);
  return w;
}

Word column_word(const Filling& t) {
  Word w;
  for (std::size_t j = 0; !t.rows.empty() && j < t.rows[0].size(); ++j)
    for (const auto& row : t.rows)
      if (j < row.size()) w.push_back(row[j] - 1);
  return w;
}

WeylConstruction weyl(const Partition& lambda, int n, const Ring& ring) {
  Partition lam = to_partition(lambda);
  Partition conj = conjugate(lam);
  ModuleMap f = compose(mult_exterior(conj, n, ring),
                        compose(s_perm(sigma_perm(conj), n, ring), comult_divided(lam, n, ring)));
  return assemble(lam, n, f, true, tag("W_", lam));
}

WeylConstruction schur_construction(const Partition& lambda, int n, const Ring& ring) {
  Partition lam = to_partition(lambda);
  Partition conj = conjugate(lam);
  ModuleMap f = compose(mult_symmetric(lam, n, ring),
                        compose(s_perm(sigma_perm(lam), n, ring), comult_exterior(conj, n, ring)));
  return assemble(lam, n, f, false, tag("S_", lam));
}

ModulePtr schur_module(const Partition& lambda, int n, const Ring& ring) {
  return schur_construction(lambda, n, ring).module;
}

std::int64_t hook_content(const Partition& lambda, int n) {
  Partition conj = conjugate(lambda);
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      long c = n + j - static_cast<long>(i);
      if (c <= 0) return 0;
      num *= c;
      den *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  mpz_class q = num / den;
  return q.get_si();
}

std::vector<Composition> weight_partitions(int d, int n) {
  std::vector<Composition> out;
  for (const auto& p : partitions(d, n)) out.push_back(pad(p, static_cast<std::size_t>(n)));
  return out;
}

StandardObject standard_object(const Partition& lambda, int n, const Ring& ring) {
  StandardObject s;
  s.lambda = to_partition(lambda);
  const bool fits = static_cast<int>(s.lambda.size()) <= n;
  s.gamma = eval_divided(fits ? pad(s.lambda, static_cast<std::size_t>(n)) : s.lambda, n, ring);
  s.U = zero_lattices(*s.gamma);
  for (const auto& mu : weight_partitions(weight(s.lambda), n))
    if (!dominance_leq(mu, s.lambda)) s.U = sum(s.U, trace(*s.gamma, mu));
  s.quotient = std::make_shared<const QuotientModule>(s.gamma, s.U, tag("Delta", s.lambda));
  s.canonical_epi = projection(s.quotient);
  return s;
}

ModuleMap standard_to_weyl(const StandardObject& delta, const WeylConstruction& w) {
  ModuleMap f = factor_through(w.cover, delta.quotient);
  if (!f.is_iso()) throw std::logic_error("Delta" + format_parts(delta.lambda) + " is not isomorphic to W");
  return f;
}

PresentationData presentation(const Partition& lambda) {
  PresentationData p;
  p.lambda = to_partition(lambda);
  const int len = static_cast<int>(p.lambda.size());
  for (int i = 1; i < len; ++i)
    for (int t = 1; t <= p.lambda[static_cast<std::size_t>(i)]; ++t) {
      Relation rel;
      rel.i = i;
      rel.t = t;
      rel.source = p.lambda;
      rel.source[static_cast<std::size_t>(i - 1)] += t;
      rel.source[static_cast<std::size_t>(i)] -= t;
      rel.a = MarginMatrix::diagonal(p.lambda);
      rel.a(i, i - 1) += t;
      rel.a(i, i) -= t;
      p.relations.push_back(std::move(rel));
    }
  return p;
}

RealizedPresentation realize_presentation(const Partition& lambda, int n, const Ring& ring) {
  RealizedPresentation out;
  out.data = presentation(lambda);
  if (static_cast<int>(out.data.lambda.size()) > n) throw std::invalid_argument("realize_presentation: lambda has more than n parts");
  const auto sz = static_cast<std::size_t>(n);
  out.p0 = eval_divided(pad(out.data.lambda, sz), n, ring);
  std::vector<ModuleMap> pieces;
  std::vector<ModulePtr> parts;
  for (const auto& rel : out.data.relations) {
    out.summands.push_back(eval_divided(pad(rel.source, sz), n, ring));
    parts.push_back(out.summands.back());
    pieces.push_back(standard_morphism_gamma(rel.a.padded(n, n), out.summands.back(), out.p0));
  }
  if (parts.empty()) {
    out.p1 = std::make_shared<const SubModule>(out.p0, zero_lattices(*out.p0), "0");
    out.alpha = ModuleMap::zero(out.p1, out.p0);
  } else {
    out.p1 = direct_sum(parts);
    std::vector<Matrix> blocks;
    for (std::size_t w = 0; w < out.p0->weights().size(); ++w) {
      Matrix m(out.p0->weight_dim(w), 0);
      for (const auto& f : pieces) m = hstack(m, f.block(w));
      blocks.push_back(std::move(m));
    }
    out.alpha = ModuleMap(out.p1, out.p0, std::move(blocks));
  }
  out.cokernel = std::make_shared<const QuotientModule>(out.p0, image_lattices(out.alpha), tag("coker", out.data.lambda));
  return out;
}

CostandardObject costandard_object(const Partition& lambda, int n, const Ring& ring) {
  CostandardObject c;
  c.lambda = to_partition(lambda);
  c.symmetric = eval_symmetric(c.lambda, n, ring);
  GradedLattice l = full_lattices(*c.symmetric);
  for (const auto& mu : weight_partitions(weight(c.lambda), n))
    if (!dominance_leq(mu, c.lambda)) l = intersection(l, reject(c.symmetric, mu));
  c.module = std::make_shared<const SubModule>(c.symmetric, l, tag("Nabla", c.lambda));
  c.inclusion = schurq::inclusion(c.module);
  return c;
}

SimpleHead simple_head(const Partition& lambda, int n, const Ring& field) {
  if (!field.is_field()) throw RingError("simple_head needs a field, got " + field.name());
  SimpleHead h;
  h.lambda = to_partition(lambda);
  h.delta = standard_object(h.lambda, n, field);
  if (static_cast<int>(h.lambda.size()) > n) throw std::invalid_argument("simple_head: lambda has more than n parts");
  // Largest submodule with zero lambda-weight space.
  h.radical = reject(h.delta.quotient, pad(h.lambda, static_cast<std::size_t>(n)));
  h.module = std::make_shared<const QuotientModule>(h.delta.quotient, h.radical, tag("L", h.lambda));
  return h;
}

}  // namespace schurq
