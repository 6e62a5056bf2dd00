#include <algorithm>
#include <stdexcept>

#include "schurq/polyfun.hpp"

namespace schurq {

std::vector<MarginMatrix> generators(int n, int d, GeneratorSet set) {
  set = resolve(set, n, d);
  std::vector<MarginMatrix> out;
  auto comps = compositions(n, d);
  if (set == GeneratorSet::Full) {
    for (const auto& l : comps)
      for (const auto& m : comps)
        for (auto& a : margin_matrices(l, m)) out.push_back(std::move(a));
    return out;
  }
  for (const auto& mu : comps) {
    out.push_back(MarginMatrix::diagonal(mu));
    for (int j = 0; j < n; ++j)
      for (int i : {j - 1, j + 1}) {
        if (i < 0 || i >= n) continue;
        for (int r = 1; r <= mu[static_cast<std::size_t>(j)]; ++r) {
          MarginMatrix a = MarginMatrix::diagonal(mu);
          a(j, j) -= r;
          a(i, j) += r;
          out.push_back(a);
        }
      }
  }
  return out;
}

GeneratorSet resolve(GeneratorSet set, int n, int d) {
  if (set != GeneratorSet::Auto) return set;
  return binomial(n * n + d - 1, d) <= 1000 ? GeneratorSet::Full : GeneratorSet::Reduced;
}

PolyModule::PolyModule(int n, int d, Ring ring, std::string name)
    : n_(n), d_(d), ring_(ring), weights_(n, d), name_(std::move(name)) {}

std::size_t PolyModule::rank() const {
  std::size_t r = 0;
  for (std::size_t w = 0; w < weights_.size(); ++w) r += weight_dim(w);
  return r;
}

std::size_t PolyModule::offset(std::size_t w) const {
  std::size_t r = 0;
  for (std::size_t v = 0; v < w; ++v) r += weight_dim(v);
  return r;
}

std::string PolyModule::label(std::size_t w, std::size_t k) const {
  return format_parts(weights_[w]) + ":" + std::to_string(k);
}

const Matrix& PolyModule::block(const MarginMatrix& a) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return *it->second;
  }
  if (a.rows != n_ || a.cols != n_ || a.total() != d_)
    throw std::invalid_argument("block: matrix does not belong to S(n, d)");
  auto m = std::make_unique<Matrix>(compute_block(a));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = cache_.emplace(a, std::move(m));
  return *it->second;
}

Matrix PolyModule::action(const MarginMatrix& a) const {
  Matrix m(rank(), rank());
  std::size_t l = weights_.index(a.row_sums()), c = weights_.index(a.col_sums());
  m.add_block(offset(l), offset(c), block(a));
  return m;
}

// ---------------------------------------------------------------------------

WordModule::WordModule(int n, Ring ring, BlockKind kind, std::vector<int> block_sizes, std::string name, int other,
                       bool tag_major)
    : PolyModule(n, [&] {
        int d = 0;
        for (int s : block_sizes) d += s;
        return d;
      }(), ring, std::move(name)),
      kind_(kind),
      sizes_(std::move(block_sizes)),
      other_(other),
      tag_major_(tag_major) {
  const int m = alphabet();
  // Normalized words of each block, lexicographic.
  std::vector<std::vector<Word>> per_block;
  for (int s : sizes_) {
    std::vector<Word> ws;
    Word cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == s) {
        ws.push_back(cur);
        return;
      }
      for (int x = start; x < m; ++x) {
        cur.push_back(x);
        self(self, kind_ == BlockKind::Exterior ? x + 1 : x);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    per_block.push_back(std::move(ws));
  }
  words_.assign(weights().size(), {});
  Word cur;
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == per_block.size()) {
      words_[weights().index(weight_of(cur))].push_back(cur);
      return;
    }
    for (const auto& w : per_block[b]) {
      cur.insert(cur.end(), w.begin(), w.end());
      self(self, b + 1);
      cur.resize(cur.size() - w.size());
    }
  };
  rec(rec, 0);
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::size_t k = 0; k < words_[w].size(); ++k) where_.emplace(words_[w][k], std::make_pair(w, k));
}

int WordModule::tag(int letter) const { return tag_major_ ? letter / other_ : letter % n(); }

int WordModule::retag(int letter, int t) const {
  return tag_major_ ? t * other_ + letter % other_ : (letter / n()) * n() + t;
}

Word WordModule::tags(const Word& w) const {
  Word t(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) t[i] = tag(w[i]);
  return t;
}

Composition WordModule::weight_of(const Word& w) const {
  Composition c(static_cast<std::size_t>(n()), 0);
  for (int x : w) ++c[static_cast<std::size_t>(tag(x))];
  return c;
}

int WordModule::normalize(Word& w) const {
  int sign = 1;
  std::size_t pos = 0;
  for (int s : sizes_) {
    auto b = w.begin() + static_cast<long>(pos), e = b + s;
    if (kind_ == BlockKind::Exterior) {
      for (auto i = b; i != e; ++i)
        for (auto j = i + 1; j != e; ++j) {
          if (*i == *j) return 0;
          if (*i > *j) sign = -sign;
        }
    }
    std::sort(b, e);
    pos += static_cast<std::size_t>(s);
  }
  return sign;
}

std::optional<std::pair<std::size_t, std::size_t>> WordModule::find(const Word& normalized) const {
  auto it = where_.find(normalized);
  if (it == where_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, std::size_t> WordModule::locate(const Word& normalized) const {
  auto it = where_.find(normalized);
  if (it == where_.end()) throw std::logic_error("word is not a basis label of " + name());
  return it->second;
}

std::string WordModule::label(std::size_t w, std::size_t k) const {
  const Word& word = words_[w][k];
  std::string s;
  std::size_t pos = 0;
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    if (b) s += "|";
    for (int t = 0; t < sizes_[b]; ++t) {
      if (t) s += ".";
      s += std::to_string(word[pos++] + 1);
    }
  }
  return s;
}

Matrix WordModule::compute_block(const MarginMatrix& a) const {
  std::size_t lw = weights().index(a.row_sums()), mw = weights().index(a.col_sums());
  Matrix m(words_[lw].size(), words_[mw].size());
  if (kind_ == BlockKind::Divided) {
    // coefficient of T' in gamma_A v_T counts words J in the orbit of T with pairs(rep T', J) = A
    MarginMatrix at = a.transpose();
    for (std::size_t r = 0; r < words_[lw].size(); ++r) {
      const Word& target = words_[lw][r];
      for (const auto& jt : tensor_apply(at, tags(target))) {
        Word j(target.size());
        for (std::size_t t = 0; t < j.size(); ++t) j[t] = retag(target[t], jt[t]);
        normalize(j);
        m(r, locate(j).second) += 1;
      }
    }
  } else {
    for (std::size_t c = 0; c < words_[mw].size(); ++c) {
      const Word& source = words_[mw][c];
      for (const auto& it : tensor_apply(a, tags(source))) {
        Word i(source.size());
        for (std::size_t t = 0; t < i.size(); ++t) i[t] = retag(source[t], it[t]);
        int s = normalize(i);
        if (s == 0) continue;
        m(locate(i).second, c) += s;
      }
    }
  }
  return m.reduced(ring());
}

namespace {

std::string kind_symbol(BlockKind k) {
  switch (k) {
    case BlockKind::Divided: return "Gamma";
    case BlockKind::Symmetric: return "S";
    case BlockKind::Exterior: return "Lambda";
  }
  return "?";
}

WordModulePtr make_word_module(BlockKind kind, const Composition& lambda, int n, const Ring& ring) {
  std::string name = kind_symbol(kind) + "^(" + format_parts(lambda) + ")";
  return std::make_shared<const WordModule>(n, ring, kind, lambda, name);
}

}  // namespace

WordModulePtr eval_divided(const Composition& lambda, int n, const Ring& ring) {
  return make_word_module(BlockKind::Divided, lambda, n, ring);
}
WordModulePtr eval_symmetric(const Composition& lambda, int n, const Ring& ring) {
  return make_word_module(BlockKind::Symmetric, lambda, n, ring);
}
WordModulePtr eval_exterior(const Composition& lambda, int n, const Ring& ring) {
  return make_word_module(BlockKind::Exterior, lambda, n, ring);
}
WordModulePtr tensor_power(int d, int n, const Ring& ring) {
  return std::make_shared<const WordModule>(n, ring, BlockKind::Divided, std::vector<int>(static_cast<std::size_t>(d), 1),
                                            "T^" + std::to_string(d));
}

Word divided_generator_word(const Composition& mu) { return canonical_word(mu); }

MarginMatrix divided_label_matrix(const WordModule& g, const Word& label) {
  const int n = g.n();
  const auto& sizes = g.block_sizes();
  MarginMatrix a(n, static_cast<int>(sizes.size()));
  std::size_t pos = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j)
    for (int t = 0; t < sizes[j]; ++t) ++a(g.tag(label[pos++]), static_cast<int>(j));
  if (a.cols != n) throw std::invalid_argument("divided_label_matrix: block count must equal n");
  return a;
}

// ---------------------------------------------------------------------------

SubModule::SubModule(ModulePtr ambient, std::vector<Matrix> bases, std::string name)
    : PolyModule(ambient->n(), ambient->d(), ambient->ring(), std::move(name)),
      ambient_(std::move(ambient)),
      bases_(std::move(bases)) {
  if (bases_.size() != weights().size()) throw std::invalid_argument("SubModule: one basis per weight");
  for (std::size_t w = 0; w < bases_.size(); ++w) {
    if (bases_[w].rows() == 0) bases_[w] = Matrix(0, ambient_->weight_dim(w));
    if (bases_[w].cols() != ambient_->weight_dim(w)) throw std::invalid_argument("SubModule: basis width");
    frames_.emplace_back(bases_[w], ring());
  }
}

SubModule::SubModule(ModulePtr ambient, const GradedLattice& lattices, std::string name)
    : SubModule(ambient,
                [&] {
                  std::vector<Matrix> b;
                  for (const auto& l : lattices) b.push_back(l.basis());
                  return b;
                }(),
                std::move(name)) {}

GradedLattice SubModule::lattices() const {
  GradedLattice out;
  for (std::size_t w = 0; w < bases_.size(); ++w) out.emplace_back(ambient_->weight_dim(w), bases_[w], ring());
  return out;
}

bool SubModule::saturated() const {
  for (const auto& f : frames_)
    if (!f.torsion_free()) return false;
  return true;
}

Matrix SubModule::compute_block(const MarginMatrix& a) const {
  std::size_t lw = weights().index(a.row_sums()), mw = weights().index(a.col_sums());
  const Ring& r = ring();
  Ring wide = r.kind() == RingKind::PrimeField ? r : Ring::rationals();
  Matrix images = multiply(ambient_->block(a), bases_[mw].transpose(), r);  // columns are images
  Matrix coords = multiply(images.transpose(), frames_[lw].section(), wide);
  // Images must lie in the submodule.
  Matrix back = multiply(coords, bases_[lw], wide);
  if (!(back == images.transpose().reduced(wide))) throw std::logic_error(name() + " is not closed under the action");
  return coords.transpose().reduced(r);
}

QuotientModule::QuotientModule(ModulePtr ambient, const GradedLattice& sub, std::string name)
    : PolyModule(ambient->n(), ambient->d(), ambient->ring(), std::move(name)), ambient_(std::move(ambient)), sub_(sub) {
  if (sub_.size() != weights().size()) throw std::invalid_argument("QuotientModule: one lattice per weight");
  for (std::size_t w = 0; w < sub_.size(); ++w) {
    frames_.emplace_back(sub_[w].basis(), ring());
    if (!frames_.back().torsion_free())
      throw std::runtime_error(this->name() + ": quotient has torsion in weight " + format_parts(weights()[w]));
  }
}

Matrix QuotientModule::compute_block(const MarginMatrix& a) const {
  std::size_t lw = weights().index(a.row_sums()), mw = weights().index(a.col_sums());
  const Ring& r = ring();
  Matrix t = multiply(ambient_->block(a), frames_[mw].lift().transpose(), r);
  return multiply(frames_[lw].proj().transpose(), t, r);
}

DualModule::DualModule(ModulePtr base)
    : PolyModule(base->n(), base->d(), base->ring(), base->name() + "°"), base_(std::move(base)) {}

Matrix DualModule::compute_block(const MarginMatrix& a) const { return base_->block(a.transpose()).transpose(); }

TensorModule::TensorModule(ModulePtr x, ModulePtr y)
    : PolyModule(x->n(), x->d() + y->d(), x->ring(), "(" + x->name() + ")⊗(" + y->name() + ")"),
      x_(std::move(x)),
      y_(std::move(y)) {
  if (x_->n() != y_->n() || x_->ring() != y_->ring()) throw std::invalid_argument("tensor_product: incompatible factors");
  dims_.assign(weights().size(), 0);
  pieces_.assign(weights().size(), {});
  const auto& wx = x_->weights();
  const auto& wy = y_->weights();
  for (std::size_t a = 0; a < wx.size(); ++a)
    for (std::size_t b = 0; b < wy.size(); ++b) {
      Composition nu = wx[a];
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += wy[b][i];
      std::size_t w = weights().index(nu);
      piece_index_[{a, b}] = pieces_[w].size();
      pieces_[w].push_back({a, b, dims_[w]});
      dims_[w] += x_->weight_dim(a) * y_->weight_dim(b);
    }
}

std::string TensorModule::label(std::size_t w, std::size_t k) const {
  for (const auto& p : pieces_[w]) {
    std::size_t sz = x_->weight_dim(p.wx) * y_->weight_dim(p.wy);
    if (k < p.offset + sz) {
      std::size_t r = k - p.offset, dy = y_->weight_dim(p.wy);
      return x_->label(p.wx, r / dy) + "⊗" + y_->label(p.wy, r % dy);
    }
  }
  return PolyModule::label(w, k);
}

Matrix TensorModule::compute_block(const MarginMatrix& c) const {
  std::size_t lw = weights().index(c.row_sums()), mw = weights().index(c.col_sums());
  Matrix m(dims_[lw], dims_[mw]);
  const int n = this->n(), dx = x_->d();
  MarginMatrix a(n, n);
  auto rec = [&](auto&& self, int cell, int left) -> void {
    if (cell == n * n) {
      if (left != 0) return;
      MarginMatrix b(n, n);
      for (std::size_t k = 0; k < a.a.size(); ++k) b.a[k] = c.a[k] - a.a[k];
      std::size_t ax_in = x_->weights().index(a.col_sums()), ax_out = x_->weights().index(a.row_sums());
      std::size_t by_in = y_->weights().index(b.col_sums()), by_out = y_->weights().index(b.row_sums());
      const auto& pin = pieces_[mw][piece_index_.at({ax_in, by_in})];
      const auto& pout = pieces_[lw][piece_index_.at({ax_out, by_out})];
      const Matrix& bx = x_->block(a);
      const Matrix& by = y_->block(b);
      if (bx.empty() || by.empty()) return;
      m.add_block(pout.offset, pin.offset, kron(bx, by, ring()));
      return;
    }
    int cap = std::min(left, c.a[static_cast<std::size_t>(cell)]);
    for (int v = 0; v <= cap; ++v) {
      a.a[static_cast<std::size_t>(cell)] = v;
      self(self, cell + 1, left - v);
    }
    a.a[static_cast<std::size_t>(cell)] = 0;
  };
  rec(rec, 0, dx);
  return m.reduced(ring());
}

DirectSumModule::DirectSumModule(std::vector<ModulePtr> parts, std::string name)
    : PolyModule(parts.at(0)->n(), parts.at(0)->d(), parts.at(0)->ring(), [&] {
        if (!name.empty()) return name;
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "⊕" : "") + parts[i]->name();
        return s;
      }()),
      parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p->n() != n() || p->d() != d() || p->ring() != ring()) throw std::invalid_argument("direct_sum: incompatible parts");
}

std::size_t DirectSumModule::weight_dim(std::size_t w) const {
  std::size_t s = 0;
  for (const auto& p : parts_) s += p->weight_dim(w);
  return s;
}

std::size_t DirectSumModule::part_offset(std::size_t p, std::size_t w) const {
  std::size_t s = 0;
  for (std::size_t q = 0; q < p; ++q) s += parts_[q]->weight_dim(w);
  return s;
}

std::string DirectSumModule::label(std::size_t w, std::size_t k) const {
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    std::size_t dim = parts_[p]->weight_dim(w);
    if (k < dim) return std::to_string(p) + ":" + parts_[p]->label(w, k);
    k -= dim;
  }
  return PolyModule::label(w, k);
}

Matrix DirectSumModule::compute_block(const MarginMatrix& a) const {
  std::vector<Matrix> bs;
  for (const auto& p : parts_) bs.push_back(p->block(a));
  return block_diagonal(bs);
}

ModulePtr dual(ModulePtr x) { return std::make_shared<const DualModule>(std::move(x)); }
ModulePtr tensor_product(ModulePtr x, ModulePtr y) {
  return std::make_shared<const TensorModule>(std::move(x), std::move(y));
}
ModulePtr direct_sum(std::vector<ModulePtr> parts) {
  return std::make_shared<const DirectSumModule>(std::move(parts));
}

// ---------------------------------------------------------------------------

GradedLattice zero_lattices(const PolyModule& x) {
  GradedLattice out;
  for (std::size_t w = 0; w < x.weights().size(); ++w) out.push_back(Lattice::zero(x.weight_dim(w), x.ring()));
  return out;
}

GradedLattice full_lattices(const PolyModule& x) {
  GradedLattice out;
  for (std::size_t w = 0; w < x.weights().size(); ++w) out.push_back(Lattice::full(x.weight_dim(w), x.ring()));
  return out;
}

GradedLattice sum(const GradedLattice& a, const GradedLattice& b) {
  GradedLattice out;
  for (std::size_t w = 0; w < a.size(); ++w) out.push_back(lattice_sum(a[w], b[w]));
  return out;
}

GradedLattice intersection(const GradedLattice& a, const GradedLattice& b) {
  GradedLattice out;
  for (std::size_t w = 0; w < a.size(); ++w) out.push_back(lattice_intersection(a[w], b[w]));
  return out;
}

bool contains(const GradedLattice& big, const GradedLattice& small) {
  for (std::size_t w = 0; w < big.size(); ++w)
    if (!big[w].contains(small[w])) return false;
  return true;
}

std::size_t total_rank(const GradedLattice& l) {
  std::size_t r = 0;
  for (const auto& x : l) r += x.rank();
  return r;
}

GradedLattice submodule_generated(const PolyModule& x, const std::vector<std::pair<std::size_t, Vector>>& vectors,
                                  GeneratorSet set) {
  const std::size_t W = x.weights().size();
  std::vector<std::vector<Vector>> seeds(W);
  for (const auto& [w, v] : vectors) seeds[w].push_back(v);
  GradedLattice l;
  for (std::size_t w = 0; w < W; ++w)
    l.emplace_back(x.weight_dim(w), Matrix::from_rows(seeds[w], x.weight_dim(w)), x.ring());
  std::vector<std::vector<MarginMatrix>> by_source(W);
  for (auto& a : generators(x.n(), x.d(), set)) {
    if (a.row_sums() == a.col_sums()) continue;
    by_source[x.weights().index(a.col_sums())].push_back(std::move(a));
  }
  std::vector<bool> dirty(W);
  for (std::size_t w = 0; w < W; ++w) dirty[w] = l[w].rank() > 0;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t w = 0; w < W; ++w) {
      if (!dirty[w]) continue;
      dirty[w] = false;
      for (const auto& a : by_source[w]) {
        std::size_t t = x.weights().index(a.row_sums());
        if (x.weight_dim(t) == 0) continue;
        Matrix img = multiply(l[w].basis(), x.block(a).transpose(), x.ring());
        if (img.is_zero()) continue;
        Lattice grown(x.weight_dim(t), vstack(l[t].basis(), img), x.ring());
        if (!(grown == l[t])) {
          l[t] = std::move(grown);
          dirty[t] = true;
          again = true;
        }
      }
    }
  }
  return l;
}

GradedLattice trace(const PolyModule& x, const Composition& mu) {
  const std::size_t W = x.weights().size();
  std::size_t mw = x.weights().index(mu);
  std::vector<std::vector<Vector>> rows(W);
  GradedLattice out;
  for (std::size_t lw = 0; lw < W; ++lw) {
    Matrix gens(0, x.weight_dim(lw));
    if (x.weight_dim(mw) > 0 && x.weight_dim(lw) > 0)
      for (const auto& a : margin_matrices(x.weights()[lw], mu)) gens = vstack(gens, x.block(a).transpose());
    out.emplace_back(x.weight_dim(lw), gens, x.ring());
  }
  return out;
}

GradedLattice annihilator(const GradedLattice& l) {
  GradedLattice out;
  for (const auto& x : l) out.push_back(annihilator(x));
  return out;
}

GradedLattice reject(ModulePtr x, const Composition& mu) { return annihilator(trace(*dual(std::move(x)), mu)); }

bool is_submodule(const PolyModule& x, const GradedLattice& l, GeneratorSet set) {
  for (const auto& a : generators(x.n(), x.d(), set)) {
    std::size_t mw = x.weights().index(a.col_sums()), lw = x.weights().index(a.row_sums());
    if (l[mw].rank() == 0) continue;
    Matrix img = multiply(l[mw].basis(), x.block(a).transpose(), x.ring());
    for (std::size_t i = 0; i < img.rows(); ++i)
      if (!l[lw].contains(img.row(i))) return false;
  }
  return true;
}

}  // namespace schurq
