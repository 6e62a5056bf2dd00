#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schurq/polyfun.hpp"

namespace schurq {

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, std::vector<Matrix> blocks)
    : src_(std::move(source)), dst_(std::move(target)), blocks_(std::move(blocks)) {
  if (src_->n() != dst_->n() || src_->d() != dst_->d() || src_->ring() != dst_->ring())
    throw std::invalid_argument("ModuleMap: source and target live over different Schur algebras");
  if (blocks_.size() != src_->weights().size()) throw std::invalid_argument("ModuleMap: one block per weight");
  for (std::size_t w = 0; w < blocks_.size(); ++w) {
    if (blocks_[w].rows() == 0 || blocks_[w].cols() == 0) blocks_[w] = Matrix(dst_->weight_dim(w), src_->weight_dim(w));
    if (blocks_[w].rows() != dst_->weight_dim(w) || blocks_[w].cols() != src_->weight_dim(w))
      throw std::invalid_argument("ModuleMap: block shape mismatch in weight " + format_parts(src_->weights()[w]));
  }
}

ModuleMap ModuleMap::zero(ModulePtr source, ModulePtr target) {
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < source->weights().size(); ++w) b.emplace_back(target->weight_dim(w), source->weight_dim(w));
  return ModuleMap(std::move(source), std::move(target), std::move(b));
}

ModuleMap ModuleMap::identity(ModulePtr x) {
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < x->weights().size(); ++w) b.push_back(Matrix::identity(x->weight_dim(w)));
  return ModuleMap(x, x, std::move(b));
}

Matrix ModuleMap::dense() const {
  Matrix m(dst_->rank(), src_->rank());
  for (std::size_t w = 0; w < blocks_.size(); ++w) m.add_block(dst_->offset(w), src_->offset(w), blocks_[w]);
  return m;
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

bool ModuleMap::is_equivariant(GeneratorSet set) const {
  const Ring& r = src_->ring();
  for (const auto& a : generators(src_->n(), src_->d(), set)) {
    std::size_t lw = src_->weights().index(a.row_sums()), mw = src_->weights().index(a.col_sums());
    if (lw == mw) continue;
    if (!(multiply(dst_->block(a), blocks_[mw], r) == multiply(blocks_[lw], src_->block(a), r))) return false;
  }
  return true;
}

bool ModuleMap::is_iso() const {
  for (const auto& b : blocks_) {
    if (b.rows() != b.cols()) return false;
    if (b.rows() && !src_->ring().is_unit(determinant(b, src_->ring()))) return false;
  }
  return true;
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += schurq::rank(b, src_->ring());
  return r;
}

namespace {

void check_composable(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return;
  for (std::size_t w = 0; w < a->weights().size(); ++w)
    if (a->weight_dim(w) != b->weight_dim(w)) throw std::invalid_argument("maps are not composable");
}

}  // namespace

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  check_composable(f.target(), g.source());
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < f.blocks().size(); ++w) b.push_back(multiply(g.block(w), f.block(w), f.source()->ring()));
  return ModuleMap(f.source(), g.target(), std::move(b));
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < f.blocks().size(); ++w) b.push_back(add(f.block(w), g.block(w), f.source()->ring()));
  return ModuleMap(f.source(), f.target(), std::move(b));
}

ModuleMap scale(const ModuleMap& f, const Scalar& c) {
  std::vector<Matrix> b;
  for (const auto& m : f.blocks()) b.push_back(scale(m, c, f.source()->ring()));
  return ModuleMap(f.source(), f.target(), std::move(b));
}

ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const Vector& coeffs) {
  if (maps.empty()) throw std::invalid_argument("linear_combination: no maps");
  ModuleMap out = ModuleMap::zero(maps[0].source(), maps[0].target());
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (coeffs[i] != 0) out = add(out, scale(maps[i], coeffs[i]));
  return out;
}

ModuleMap dual(const ModuleMap& f, ModulePtr dual_source, ModulePtr dual_target) {
  std::vector<Matrix> b;
  for (const auto& m : f.blocks()) b.push_back(m.transpose());
  return ModuleMap(std::move(dual_source), std::move(dual_target), std::move(b));
}

ModuleMap tensor(const ModuleMap& f, const ModuleMap& g, ModulePtr src, ModulePtr dst) {
  auto ts = std::dynamic_pointer_cast<const TensorModule>(src);
  auto td = std::dynamic_pointer_cast<const TensorModule>(dst);
  if (!ts || !td) throw std::invalid_argument("tensor: source and target must be tensor modules");
  const Ring& r = src->ring();
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < src->weights().size(); ++w) {
    Matrix m(dst->weight_dim(w), src->weight_dim(w));
    const auto& ps = ts->pieces(w);
    const auto& pd = td->pieces(w);
    for (std::size_t k = 0; k < ps.size(); ++k) m.add_block(pd[k].offset, ps[k].offset, kron(f.block(ps[k].wx), g.block(ps[k].wy), r));
    b.push_back(std::move(m));
  }
  return ModuleMap(std::move(src), std::move(dst), std::move(b));
}

GradedLattice kernel_lattices(const ModuleMap& f) {
  GradedLattice out;
  for (std::size_t w = 0; w < f.blocks().size(); ++w) {
    const Matrix& b = f.block(w);
    if (b.rows() == 0)
      out.push_back(Lattice::full(b.cols(), f.source()->ring()));
    else
      out.push_back(kernel_basis(b.transpose(), f.source()->ring()));
    if (out.back().ambient_rank() != b.cols()) out.back() = Lattice::zero(b.cols(), f.source()->ring());
  }
  return out;
}

GradedLattice image_lattices(const ModuleMap& f) {
  GradedLattice out;
  for (const auto& b : f.blocks()) out.emplace_back(b.rows(), b.transpose(), f.source()->ring());
  return out;
}

std::shared_ptr<const SubModule> kernel(const ModuleMap& f) {
  return std::make_shared<const SubModule>(f.source(), kernel_lattices(f), "ker");
}

std::shared_ptr<const SubModule> image(const ModuleMap& f) {
  return std::make_shared<const SubModule>(f.target(), image_lattices(f), "im");
}

ModuleMap inclusion(std::shared_ptr<const SubModule> s) {
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < s->weights().size(); ++w) b.push_back(s->basis(w).transpose());
  return ModuleMap(s, s->ambient(), std::move(b));
}

ModuleMap projection(std::shared_ptr<const QuotientModule> q) {
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < q->weights().size(); ++w) b.push_back(q->frame(w).proj().transpose());
  return ModuleMap(q->ambient(), q, std::move(b));
}

ModuleMap factor_through(const ModuleMap& f, std::shared_ptr<const QuotientModule> q) {
  const Ring& r = f.source()->ring();
  check_composable(q->ambient(), f.source());
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < q->weights().size(); ++w) {
    if (!multiply(f.block(w), q->sub()[w].basis().transpose(), r).is_zero())
      throw std::logic_error("factor_through: map does not vanish on the submodule");
    b.push_back(multiply(f.block(w), q->frame(w).lift().transpose(), r));
  }
  return ModuleMap(q, f.target(), std::move(b));
}

ModuleMap corestrict(const ModuleMap& f, std::shared_ptr<const SubModule> s) {
  const Ring& r = f.source()->ring();
  check_composable(s->ambient(), f.target());
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < s->weights().size(); ++w) {
    Matrix cols = f.block(w).transpose();  // rows are images
    Matrix c(cols.rows(), s->weight_dim(w));
    for (std::size_t i = 0; i < cols.rows(); ++i) {
      Vector v = cols.row(i);
      Vector x = s->frame(w).sub_coordinates(v);
      if (!(vec_mul(x, s->basis(w), r) == v)) throw std::logic_error("corestrict: image leaves the submodule");
      c.set_row(i, x);
    }
    b.push_back(c.transpose());
  }
  return ModuleMap(f.source(), s, std::move(b));
}

ModuleMap induced_map(const ModuleMap& f, std::shared_ptr<const QuotientModule> qx,
                      std::shared_ptr<const QuotientModule> qy) {
  const Ring& r = f.source()->ring();
  std::vector<Matrix> b;
  for (std::size_t w = 0; w < qx->weights().size(); ++w) {
    Matrix img = multiply(qx->sub()[w].basis(), f.block(w).transpose(), r);
    for (std::size_t i = 0; i < img.rows(); ++i)
      if (!qy->sub()[w].contains(img.row(i))) throw std::logic_error("induced_map: submodule not preserved");
    b.push_back(multiply(multiply(qy->frame(w).proj().transpose(), f.block(w), r), qx->frame(w).lift().transpose(), r));
  }
  return ModuleMap(qx, qy, std::move(b));
}

// ---------------------------------------------------------------------------

namespace {

using Content = std::vector<int>;

Content content_of(const Word& w, std::size_t from, std::size_t len, int n) {
  Content c(static_cast<std::size_t>(n), 0);
  for (std::size_t t = from; t < from + len; ++t) ++c[static_cast<std::size_t>(w[t])];
  return c;
}

Word word_of(const Content& c) {
  Word w;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int k = 0; k < c[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

// All ways to write beta as an ordered sum of vectors with the given totals.
void splittings(const Content& beta, const std::vector<int>& totals, std::vector<std::vector<Content>>& out) {
  std::vector<Content> cur;
  Content left = beta;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i + 1 == totals.size()) {
      int s = 0;
      for (int x : left) s += x;
      if (s != totals[i]) return;
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    Content piece(beta.size(), 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int need) {
      if (r == beta.size()) {
        if (need) return;
        for (std::size_t k = 0; k < beta.size(); ++k) left[k] -= piece[k];
        cur.push_back(piece);
        rec(i + 1);
        cur.pop_back();
        for (std::size_t k = 0; k < beta.size(); ++k) left[k] += piece[k];
        return;
      }
      for (int v = std::min(need, left[r]); v >= 0; --v) {
        piece[r] = v;
        fill(r + 1, need - v);
      }
      piece[r] = 0;
    };
    fill(0, totals[i]);
  };
  if (totals.empty()) return;
  rec(0);
}

mpz_class fact(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// Shared driver for gamma_A and sigma_A: split each source block content
// among target blocks and weight the result.
enum class SplitRule { Divided, Symmetric };

// Image of one source word (blocks sorted) as target words with coefficients.
std::map<Word, mpz_class> split_apply(const MarginMatrix& a, int n, const Word& word, SplitRule rule) {
  const int L = a.rows, M = a.cols;
  std::map<Word, mpz_class> result;
  std::vector<std::vector<std::vector<Content>>> per_source(static_cast<std::size_t>(M));
  std::size_t pos = 0;
  const Composition mu = a.col_sums();
  for (int j = 0; j < M; ++j) {
    std::vector<int> totals(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) totals[static_cast<std::size_t>(i)] = a(i, j);
    std::size_t len = static_cast<std::size_t>(mu[static_cast<std::size_t>(j)]);
    Content beta = content_of(word, pos, len, n);
    pos += len;
    splittings(beta, totals, per_source[static_cast<std::size_t>(j)]);
  }
  std::vector<const std::vector<Content>*> choice(static_cast<std::size_t>(M));
  auto piece = [&](int j, int i) -> const Content& {
    return (*choice[static_cast<std::size_t>(j)])[static_cast<std::size_t>(i)];
  };
  std::function<void(int)> rec = [&](int j) {
    if (j == M) {
      mpz_class coeff = 1;
      Word target;
      for (int i = 0; i < L; ++i) {
        Content alpha(static_cast<std::size_t>(n), 0);
        for (int jj = 0; jj < M; ++jj)
          for (int r = 0; r < n; ++r) alpha[static_cast<std::size_t>(r)] += piece(jj, i)[static_cast<std::size_t>(r)];
        if (rule == SplitRule::Divided) {
          // product of divided powers of the same letter
          for (int r = 0; r < n; ++r) {
            coeff *= fact(alpha[static_cast<std::size_t>(r)]);
            for (int jj = 0; jj < M; ++jj) coeff /= fact(piece(jj, i)[static_cast<std::size_t>(r)]);
          }
        } else {
          // number of words of the source content with these segment contents
          for (int jj = 0; jj < M; ++jj) {
            coeff *= fact(a(i, jj));
            for (int r = 0; r < n; ++r) coeff /= fact(piece(jj, i)[static_cast<std::size_t>(r)]);
          }
        }
        Word wi = word_of(alpha);
        target.insert(target.end(), wi.begin(), wi.end());
      }
      result[target] += coeff;
      return;
    }
    for (const auto& s : per_source[static_cast<std::size_t>(j)]) {
      choice[static_cast<std::size_t>(j)] = &s;
      rec(j + 1);
    }
  };
  rec(0);
  return result;
}

ModuleMap split_morphism(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst, SplitRule rule) {
  if (a.col_sums() != src->block_sizes() || a.row_sums() != dst->block_sizes())
    throw std::invalid_argument("standard morphism: margins do not match source and target");
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < src->weights().size(); ++w) {
    Matrix m(dst->weight_dim(w), src->weight_dim(w));
    for (std::size_t k = 0; k < src->weight_dim(w); ++k)
      for (const auto& [target, c] : split_apply(a, src->n(), src->words(w)[k], rule))
        m(dst->locate(target).second, k) += Scalar(c);
    blocks.push_back(m.reduced(src->ring()));
  }
  return ModuleMap(src, dst, std::move(blocks));
}

}  // namespace

std::map<Word, mpz_class> standard_gamma_apply(const MarginMatrix& a, int n, const Word& word) {
  return split_apply(a, n, word, SplitRule::Divided);
}

ModuleMap standard_morphism_gamma(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst) {
  return split_morphism(a, std::move(src), std::move(dst), SplitRule::Divided);
}

ModuleMap standard_morphism_sigma(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst) {
  return split_morphism(a, std::move(src), std::move(dst), SplitRule::Symmetric);
}

ModuleMap standard_morphism_gamma(const MarginMatrix& a, int n, const Ring& ring) {
  return standard_morphism_gamma(a, eval_divided(a.col_sums(), n, ring), eval_divided(a.row_sums(), n, ring));
}

ModuleMap standard_morphism_sigma(const MarginMatrix& a, int n, const Ring& ring) {
  return standard_morphism_sigma(a, eval_divided(a.col_sums(), n, ring), eval_symmetric(a.row_sums(), n, ring));
}

ModuleMap standard_morphism_exterior(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst) {
  const int L = a.rows, M = a.cols;
  if (a.col_sums() != src->block_sizes() || a.row_sums() != dst->block_sizes())
    throw std::invalid_argument("exterior standard morphism: margins do not match");
  const Ring& ring = src->ring();
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < src->weights().size(); ++w) {
    Matrix m(dst->weight_dim(w), src->weight_dim(w));
    for (std::size_t k = 0; k < src->weight_dim(w); ++k) {
      const Word& word = src->words(w)[k];
      // Target block of each letter, chosen with a_ij letters of source block j going to block i.
      std::vector<int> assign(word.size());
      std::vector<std::size_t> start(static_cast<std::size_t>(M) + 1, 0);
      for (int j = 0; j < M; ++j) start[static_cast<std::size_t>(j) + 1] = start[static_cast<std::size_t>(j)] + static_cast<std::size_t>(a.col_sums()[static_cast<std::size_t>(j)]);
      std::function<void(int)> rec = [&](int j) {
        if (j == M) {
          std::vector<std::pair<int, int>> keys(word.size());
          for (std::size_t t = 0; t < word.size(); ++t) keys[t] = {assign[t], word[t]};
          int sign = 1;
          for (std::size_t s = 0; s < keys.size(); ++s)
            for (std::size_t t = s + 1; t < keys.size(); ++t) {
              if (keys[s] == keys[t]) return;
              if (keys[t] < keys[s]) sign = -sign;
            }
          auto sorted = keys;
          std::sort(sorted.begin(), sorted.end());
          Word target(word.size());
          for (std::size_t t = 0; t < sorted.size(); ++t) target[t] = sorted[t].second;
          m(dst->locate(target).second, k) += sign;
          return;
        }
        std::vector<int> ms;
        for (int i = 0; i < L; ++i)
          for (int c = 0; c < a(i, j); ++c) ms.push_back(i);
        do {
          for (std::size_t t = 0; t < ms.size(); ++t) assign[start[static_cast<std::size_t>(j)] + t] = ms[t];
          rec(j + 1);
        } while (std::next_permutation(ms.begin(), ms.end()));
      };
      rec(0);
    }
    blocks.push_back(m.reduced(ring));
  }
  return ModuleMap(src, dst, std::move(blocks));
}

ModuleMap standard_morphism_exterior(const MarginMatrix& a, int n, const Ring& ring) {
  return standard_morphism_exterior(a, eval_exterior(a.col_sums(), n, ring), eval_exterior(a.row_sums(), n, ring));
}

namespace {

// Linear map from a word module to tensor space or back, given per-basis-word images.
ModuleMap word_map(WordModulePtr src, WordModulePtr dst,
                   const std::function<void(const Word&, const std::function<void(const Word&, int)>&)>& images) {
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < src->weights().size(); ++w) {
    Matrix m(dst->weight_dim(w), src->weight_dim(w));
    for (std::size_t k = 0; k < src->weight_dim(w); ++k)
      images(src->words(w)[k], [&](const Word& out, int c) {
        if (c == 0) return;
        m(dst->locate(out).second, k) += c;
      });
    blocks.push_back(m.reduced(src->ring()));
  }
  return ModuleMap(src, dst, std::move(blocks));
}

// Calls f on every rearrangement of each block of w (with permutation sign).
void block_permutations(const Word& w, const std::vector<int>& sizes, bool distinct_only,
                        const std::function<void(const Word&, int)>& f) {
  Word cur = w;
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t b, std::size_t pos, int sign) {
    if (b == sizes.size()) {
      f(cur, sign);
      return;
    }
    std::size_t len = static_cast<std::size_t>(sizes[b]);
    if (distinct_only) {
      Word seg(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + len));
      std::sort(seg.begin(), seg.end());
      do {
        std::copy(seg.begin(), seg.end(), cur.begin() + static_cast<long>(pos));
        rec(b + 1, pos + len, sign);
      } while (std::next_permutation(seg.begin(), seg.end()));
    } else {
      std::vector<int> idx(len);
      for (std::size_t t = 0; t < len; ++t) idx[t] = static_cast<int>(t) + 1;
      do {
        for (std::size_t t = 0; t < len; ++t) cur[pos + t] = w[pos + static_cast<std::size_t>(idx[t] - 1)];
        rec(b + 1, pos + len, sign * perm_sign(idx));
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  };
  rec(0, 0, 1);
}

}  // namespace

ModuleMap comult_divided(const Composition& lambda, int n, const Ring& ring) {
  auto src = eval_divided(lambda, n, ring);
  auto dst = tensor_power(weight(lambda), n, ring);
  return word_map(src, dst, [&](const Word& w, const std::function<void(const Word&, int)>& emit) {
    block_permutations(w, lambda, true, [&](const Word& out, int) { emit(out, 1); });
  });
}

ModuleMap comult_exterior(const Composition& lambda, int n, const Ring& ring) {
  auto src = eval_exterior(lambda, n, ring);
  auto dst = tensor_power(weight(lambda), n, ring);
  return word_map(src, dst, [&](const Word& w, const std::function<void(const Word&, int)>& emit) {
    block_permutations(w, lambda, false, emit);
  });
}

ModuleMap mult_symmetric(const Composition& lambda, int n, const Ring& ring) {
  auto src = tensor_power(weight(lambda), n, ring);
  auto dst = eval_symmetric(lambda, n, ring);
  return word_map(src, dst, [&](const Word& w, const std::function<void(const Word&, int)>& emit) {
    Word out = w;
    emit(out, dst->normalize(out));
  });
}

ModuleMap mult_exterior(const Composition& lambda, int n, const Ring& ring) {
  auto src = tensor_power(weight(lambda), n, ring);
  auto dst = eval_exterior(lambda, n, ring);
  return word_map(src, dst, [&](const Word& w, const std::function<void(const Word&, int)>& emit) {
    Word out = w;
    int s = dst->normalize(out);
    if (s) emit(out, s);
  });
}

ModuleMap s_perm(const std::vector<int>& sigma, int n, const Ring& ring) {
  auto t = tensor_power(static_cast<int>(sigma.size()), n, ring);
  return word_map(t, t, [&](const Word& w, const std::function<void(const Word&, int)>& emit) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[static_cast<std::size_t>(sigma[i] - 1)];
    emit(out, 1);
  });
}

ModuleMap yoneda_map(WordModulePtr gamma_mu, ModulePtr y, const Vector& y_mu) {
  const Ring& r = y->ring();
  Composition mu = gamma_mu->block_sizes();
  std::size_t mw = y->weights().index(mu);
  if (y_mu.size() != y->weight_dim(mw)) throw std::invalid_argument("yoneda_map: vector has wrong length");
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < gamma_mu->weights().size(); ++w) {
    Matrix m(y->weight_dim(w), gamma_mu->weight_dim(w));
    for (std::size_t k = 0; k < gamma_mu->weight_dim(w); ++k) {
      MarginMatrix at = divided_label_matrix(*gamma_mu, gamma_mu->words(w)[k]);
      Matrix col = multiply(y->block(at), Matrix::from_rows({y_mu}, y_mu.size()).transpose(), r);
      for (std::size_t i = 0; i < col.rows(); ++i) m(i, k) = col(i, 0);
    }
    blocks.push_back(std::move(m));
  }
  return ModuleMap(gamma_mu, std::move(y), std::move(blocks));
}

}  // namespace schurq
