#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "schurq/hwc.hpp"

namespace schurq {

namespace {

using Sparse = std::map<Word, Scalar>;

std::vector<int> content(const Word& w, std::size_t from, std::size_t len, int n) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (std::size_t t = from; t < from + len; ++t) ++c[static_cast<std::size_t>(w[t])];
  return c;
}

Sparse sparse(const WordModule& g, std::size_t w, const Vector& v) {
  Sparse s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) s[g.words(w)[k]] = v[k];
  return s;
}

Sparse psi_sparse(const Partition& lambda, int a, int b, const Sparse& x, const Sparse& y) {
  Sparse out;
  for (const auto& [xw, xc] : x)
    for (const auto& [yw, yc] : y)
      for (const auto& [w, c] : psi_apply(lambda, a, b, xw, yw)) out[w] += xc * yc * Scalar(c);
  return out;
}

// Everything the engine needs to know about where V (x) W words live in the module.
struct Target {
  ModulePtr module;
  std::function<std::pair<std::size_t, std::size_t>(const Word&)> locate;
  bool module_is_v;                  // module side is V, multiplicity side W
  std::optional<Composition> slice;  // only V-words of this weight enter
};

Vector dense_at(const Target& t, const Sparse& s, std::size_t& weight) {
  Vector v;
  bool first = true;
  for (const auto& [w, c] : s) {
    if (c == 0) continue;
    auto [wi, k] = t.locate(w);
    if (first) {
      weight = wi;
      v.assign(t.module->weight_dim(wi), Scalar(0));
      first = false;
    } else if (wi != weight) {
      throw std::logic_error("psi image is not homogeneous");
    }
    v[k] += c;
  }
  return v;
}

FiltrationChain psi_filtration(const Target& t, int a, int b, int d, const std::vector<Partition>& lambdas) {
  const PolyModule& m = *t.module;
  const Ring& r = m.ring();
  const std::size_t W = m.weights().size();
  const int mrank = t.module_is_v ? a : b, xrank = t.module_is_v ? b : a;
  FiltrationChain chain;
  chain.ambient = t.module;
  GradedLattice prev = zero_lattices(m);

  auto psi_vw = [&](const Partition& lam, const Sparse& module_side, const Sparse& mult_side) {
    return t.module_is_v ? psi_sparse(lam, a, b, module_side, mult_side) : psi_sparse(lam, a, b, mult_side, module_side);
  };
  auto in_slice = [&](const WordModule& g, std::size_t w) {
    return !t.slice || g.weights()[w] == *t.slice;
  };

  for (const auto& lam : lambdas) {
    FiltrationStep step;
    step.lambda = lam;
    StandardObject dm = standard_object(lam, mrank, r);
    StandardObject dx = standard_object(lam, xrank, r);
    const WordModule& gm = *dm.gamma;
    const WordModule& gx = *dx.gamma;

    // Multiplicity side: basis of Gamma^lambda words and lifts of the Delta basis.
    std::vector<Sparse> x_words, x_lifts, x_kernel;
    for (std::size_t w = 0; w < gx.weights().size(); ++w) {
      if (t.module_is_v ? false : !in_slice(gx, w)) continue;
      for (const auto& word : gx.words(w)) x_words.push_back({{word, Scalar(1)}});
      const auto& fr = dx.quotient->frame(w);
      for (std::size_t k = 0; k < fr.quotient_rank(); ++k) x_lifts.push_back(sparse(gx, w, fr.lift().row(k)));
      for (std::size_t k = 0; k < dx.U[w].rank(); ++k) x_kernel.push_back(sparse(gx, w, dx.U[w].basis().row(k)));
    }

    // Span of psi^lambda.
    std::vector<std::vector<Vector>> rows(W);
    for (std::size_t w = 0; w < gm.weights().size(); ++w) {
      if (t.module_is_v && !in_slice(gm, w)) continue;
      for (const auto& word : gm.words(w))
        for (const auto& xs : x_words) {
          std::size_t tw = 0;
          Vector v = dense_at(t, psi_vw(lam, {{word, Scalar(1)}}, xs), tw);
          if (!v.empty()) rows[tw].push_back(std::move(v));
        }
    }
    GradedLattice cur;
    for (std::size_t w = 0; w < W; ++w)
      cur.push_back(lattice_sum(prev[w], Lattice(m.weight_dim(w), Matrix::from_rows(rows[w], m.weight_dim(w)), r)));
    step.sub = cur;

    auto fsub = std::make_shared<const SubModule>(t.module, cur, "F" + format_parts(lam));
    GradedLattice below;
    for (std::size_t w = 0; w < W; ++w)
      below.emplace_back(fsub->weight_dim(w), multiply(prev[w].basis(), fsub->frame(w).section(), r), r);
    std::shared_ptr<const QuotientModule> factor;
    try {
      factor = std::make_shared<const QuotientModule>(fsub, below, "F" + format_parts(lam) + "/F+");
    } catch (const std::runtime_error& e) {
      chain.failure = e.what();
      chain.steps.push_back(std::move(step));
      return chain;
    }
    step.factor_rank = factor->rank();
    step.multiplicity = x_lifts.size();

    // psi^lambda must vanish modulo F_{lambda+} on the kernels of both covers.
    bool well_defined = true;
    auto check_below = [&](const Sparse& module_side, const Sparse& mult_side) {
      std::size_t tw = 0;
      Vector v = dense_at(t, psi_vw(lam, module_side, mult_side), tw);
      if (!v.empty() && !prev[tw].contains(v)) well_defined = false;
    };
    for (std::size_t w = 0; w < gm.weights().size() && well_defined; ++w) {
      if (t.module_is_v && !in_slice(gm, w)) continue;
      for (std::size_t k = 0; k < dm.U[w].rank(); ++k)
        for (const auto& xs : x_words) check_below(sparse(gm, w, dm.U[w].basis().row(k)), xs);
      for (const auto& word : gm.words(w))
        for (const auto& xk : x_kernel) check_below({{word, Scalar(1)}}, xk);
    }

    const std::size_t copies = x_lifts.size();
    if (copies == 0 || dm.quotient->rank() == 0) {
      step.verified = well_defined && step.factor_rank == 0;
    } else {
      std::vector<ModulePtr> parts(copies, dm.quotient);
      step.model = direct_sum(parts);
      auto ds = std::dynamic_pointer_cast<const DirectSumModule>(step.model);
      std::vector<Matrix> blocks;
      for (std::size_t w = 0; w < W; ++w) {
        Matrix blk(factor->weight_dim(w), step.model->weight_dim(w));
        const auto& fr = dm.quotient->frame(w);
        for (std::size_t c = 0; c < copies; ++c)
          for (std::size_t k = 0; k < fr.quotient_rank(); ++k) {
            std::size_t tw = w;
            Vector v = dense_at(t, psi_vw(lam, sparse(gm, w, fr.lift().row(k)), x_lifts[c]), tw);
            if (v.empty()) continue;
            if (tw != w) throw std::logic_error("psi changes the module weight");
            Vector in_f = vec_mul(v, fsub->frame(w).section(), r.is_field() ? r : Ring::rationals());
            Vector q = vec_mul(in_f, factor->frame(w).proj(), r.is_field() ? r : Ring::rationals());
            for (std::size_t i = 0; i < q.size(); ++i) blk(i, ds->part_offset(c, w) + k) = r.reduce(q[i]);
          }
        blocks.push_back(std::move(blk));
      }
      step.witness = ModuleMap(step.model, factor, std::move(blocks));
      step.verified = well_defined && step.witness.is_iso() && step.witness.is_equivariant();
    }
    if (!step.verified && chain.failure.empty()) chain.failure = "factor at " + format_parts(lam) + " not verified";
    prev = cur;
    chain.steps.push_back(std::move(step));
  }
  (void)d;
  chain.complete = chain.failure.empty() && !chain.steps.empty() && contains(chain.steps.back().sub, full_lattices(m));
  if (chain.failure.empty() && !chain.complete) chain.failure = "last step is not the whole module";
  return chain;
}

}  // namespace

WordModulePtr cauchy_ambient(int a, int b, int d, const Ring& ring) {
  return std::make_shared<const WordModule>(a, ring, BlockKind::Divided, std::vector<int>{d},
                                            "Gamma^" + std::to_string(d) + "(V(x)W)", b, true);
}

WordModulePtr cauchy_ambient_w(int a, int b, int d, const Ring& ring) {
  return std::make_shared<const WordModule>(b, ring, BlockKind::Divided, std::vector<int>{d},
                                            "Gamma^" + std::to_string(d) + "(V(x)W)", a, false);
}

std::map<Word, mpz_class> psi_apply(const Partition& lambda, int a, int b, const Word& x, const Word& y) {
  // Each block pairs its V content with its W content through every matrix with those margins;
  // the block products multiply divided powers cell by cell.
  std::vector<std::vector<MarginMatrix>> choices;
  std::size_t pos = 0;
  for (int part : lambda) {
    auto sz = static_cast<std::size_t>(part);
    choices.push_back(margin_matrices(content(x, pos, sz, a), content(y, pos, sz, b)));
    pos += sz;
  }
  std::map<Word, mpz_class> out;
  std::vector<int> total(static_cast<std::size_t>(a * b), 0);
  std::function<void(std::size_t, mpz_class)> rec = [&](std::size_t p, mpz_class denom) {
    if (p == choices.size()) {
      mpz_class num = 1;
      Word w;
      for (int cell = 0; cell < a * b; ++cell) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(total[static_cast<std::size_t>(cell)]));
        num *= f;
        w.insert(w.end(), static_cast<std::size_t>(total[static_cast<std::size_t>(cell)]), cell);
      }
      out[w] += num / denom;
      return;
    }
    for (const auto& m : choices[p]) {
      mpz_class dd = denom;
      for (int cell = 0; cell < a * b; ++cell) {
        int v = m.a[static_cast<std::size_t>(cell)];
        total[static_cast<std::size_t>(cell)] += v;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
        dd *= f;
      }
      rec(p + 1, dd);
      for (int cell = 0; cell < a * b; ++cell) total[static_cast<std::size_t>(cell)] -= m.a[static_cast<std::size_t>(cell)];
    }
  };
  rec(0, 1);
  return out;
}

Matrix psi_map(const Partition& lambda, int a, int b, const Ring& ring) {
  Partition lam = to_partition(lambda);
  int d = weight(lam);
  auto amb = cauchy_ambient(a, b, d, ring);
  auto gv = eval_divided(lam, a, ring);
  auto gw = eval_divided(lam, b, ring);
  std::vector<Word> ws;
  for (std::size_t w = 0; w < gw->weights().size(); ++w)
    for (const auto& word : gw->words(w)) ws.push_back(word);
  Matrix m(amb->rank(), gv->rank() * ws.size());
  std::size_t col = 0;
  for (std::size_t w = 0; w < gv->weights().size(); ++w)
    for (const auto& xw : gv->words(w))
      for (const auto& yw : ws) {
        for (const auto& [word, c] : psi_apply(lam, a, b, xw, yw)) {
          auto [tw, k] = amb->locate(word);
          m(amb->offset(tw) + k, col) = ring.reduce(Scalar(c));
        }
        ++col;
      }
  return m;
}

FiltrationChain cauchy_filtration(int a, int b, int d, const Ring& ring) {
  auto amb = cauchy_ambient(a, b, d, ring);
  Target t{amb, [amb](const Word& w) { return amb->locate(w); }, true, std::nullopt};
  return psi_filtration(t, a, b, d, partitions(d));
}

FiltrationChain cauchy_filtration_projective(const Composition& mu, int n, const Ring& ring) {
  Composition m = pad(mu, static_cast<std::size_t>(n));
  int d = weight(m);
  auto g = eval_divided(m, n, ring);
  Target t{g,
           [g, n](const Word& w) {
             Word s = w;
             std::sort(s.begin(), s.end());
             for (auto& letter : s) letter %= n;
             return g->locate(s);
           },
           false, m};
  Composition sorted = m;
  std::sort(sorted.rbegin(), sorted.rend());
  std::vector<Partition> lambdas;
  for (const auto& lam : partitions(d))
    if (lex_compare(lam, sorted) >= 0) lambdas.push_back(lam);
  return psi_filtration(t, n, n, d, lambdas);
}

}  // namespace schurq
