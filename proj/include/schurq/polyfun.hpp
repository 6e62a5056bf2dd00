#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schurq/combinat.hpp"
#include "schurq/exactla.hpp"
#include "schurq/schuralg.hpp"

namespace schurq {

enum class GeneratorSet { Full, Reduced, Auto };

/// Algebra elements gamma_A used to test equivariance or close submodules.
/// Reduced: idempotents and the divided powers e_i^{(r)} xi_mu, f_i^{(r)} xi_mu.
std::vector<MarginMatrix> generators(int n, int d, GeneratorSet set);
GeneratorSet resolve(GeneratorSet set, int n, int d);

/// Per-weight submodule data, indexed like Lambda(n, d).
using GradedLattice = std::vector<Lattice>;

/// A finite module over S(n, d), stored weight space by weight space.
/// block(A) maps X_mu to X_lambda (mu = column sums, lambda = row sums) and
/// acts on column vectors.
class PolyModule {
 public:
  PolyModule(int n, int d, Ring ring, std::string name);
  virtual ~PolyModule() = default;
  PolyModule(const PolyModule&) = delete;
  PolyModule& operator=(const PolyModule&) = delete;

  int n() const { return n_; }
  int d() const { return d_; }
  const Ring& ring() const { return ring_; }
  const CompositionIndex& weights() const { return weights_; }
  const std::string& name() const { return name_; }
  bool truncated() const { return n_ < d_; }

  virtual std::size_t weight_dim(std::size_t w) const = 0;
  std::size_t weight_dim(const Composition& mu) const { return weight_dim(weights_.index(mu)); }
  std::size_t rank() const;
  std::size_t offset(std::size_t w) const;
  virtual std::string label(std::size_t w, std::size_t k) const;

  const Matrix& block(const MarginMatrix& a) const;
  /// Action on the whole module in the flat basis.
  Matrix action(const MarginMatrix& a) const;

 protected:
  virtual Matrix compute_block(const MarginMatrix& a) const = 0;

 private:
  int n_, d_;
  Ring ring_;
  CompositionIndex weights_;
  std::string name_;
  mutable std::mutex mu_;
  mutable std::map<MarginMatrix, std::unique_ptr<Matrix>> cache_;
};

using ModulePtr = std::shared_ptr<const PolyModule>;

enum class BlockKind { Divided, Symmetric, Exterior };

/// Tensor product of divided, symmetric or exterior powers of a free module.
/// Letters encode (tag, other) pairs; the algebra acts on tags.
class WordModule : public PolyModule {
 public:
  WordModule(int n, Ring ring, BlockKind kind, std::vector<int> block_sizes, std::string name, int other = 1,
             bool tag_major = true);

  using PolyModule::weight_dim;
  std::size_t weight_dim(std::size_t w) const override { return words_[w].size(); }
  std::string label(std::size_t w, std::size_t k) const override;

  BlockKind kind() const { return kind_; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  int alphabet() const { return n() * other_; }
  int other() const { return other_; }
  int tag(int letter) const;
  int retag(int letter, int t) const;
  Word tags(const Word& w) const;

  const std::vector<Word>& words(std::size_t w) const { return words_[w]; }
  /// Sorts each block; returns the sign picked up (0 if an exterior block repeats).
  int normalize(Word& w) const;
  /// Weight index and position of a normalized word.
  std::pair<std::size_t, std::size_t> locate(const Word& normalized) const;
  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& normalized) const;
  Composition weight_of(const Word& w) const;

 protected:
  Matrix compute_block(const MarginMatrix& a) const override;

 private:
  BlockKind kind_;
  std::vector<int> sizes_;
  int other_;
  bool tag_major_;
  std::vector<std::vector<Word>> words_;
  std::map<Word, std::pair<std::size_t, std::size_t>> where_;
};

using WordModulePtr = std::shared_ptr<const WordModule>;

WordModulePtr eval_divided(const Composition& lambda, int n, const Ring& ring);
WordModulePtr eval_symmetric(const Composition& lambda, int n, const Ring& ring);
WordModulePtr eval_exterior(const Composition& lambda, int n, const Ring& ring);
WordModulePtr tensor_power(int d, int n, const Ring& ring);

/// Generator of Gamma^mu at weight mu: block j is the word j^{mu_j}.
Word divided_generator_word(const Composition& mu);
/// Matrix A_T with v_T = gamma_{A_T} gen_mu, for a label T of Gamma^mu.
MarginMatrix divided_label_matrix(const WordModule& gamma_mu, const Word& label);

/// Submodule with an explicit basis per weight (rows are vectors of the ambient weight space).
class SubModule : public PolyModule {
 public:
  SubModule(ModulePtr ambient, std::vector<Matrix> bases, std::string name);
  SubModule(ModulePtr ambient, const GradedLattice& lattices, std::string name);

  using PolyModule::weight_dim;
  std::size_t weight_dim(std::size_t w) const override { return bases_[w].rows(); }
  const ModulePtr& ambient() const { return ambient_; }
  const Matrix& basis(std::size_t w) const { return bases_[w]; }
  const Frame& frame(std::size_t w) const { return frames_[w]; }
  GradedLattice lattices() const;
  bool saturated() const;

 protected:
  Matrix compute_block(const MarginMatrix& a) const override;

 private:
  ModulePtr ambient_;
  std::vector<Matrix> bases_;
  std::vector<Frame> frames_;
};

/// ambient / sub; throws over Z when a weight space of the quotient has torsion.
class QuotientModule : public PolyModule {
 public:
  QuotientModule(ModulePtr ambient, const GradedLattice& sub, std::string name);

  using PolyModule::weight_dim;
  std::size_t weight_dim(std::size_t w) const override { return frames_[w].quotient_rank(); }
  const ModulePtr& ambient() const { return ambient_; }
  const Frame& frame(std::size_t w) const { return frames_[w]; }
  const GradedLattice& sub() const { return sub_; }

 protected:
  Matrix compute_block(const MarginMatrix& a) const override;

 private:
  ModulePtr ambient_;
  GradedLattice sub_;
  std::vector<Frame> frames_;
};

class DualModule : public PolyModule {
 public:
  explicit DualModule(ModulePtr base);
  using PolyModule::weight_dim;
  std::size_t weight_dim(std::size_t w) const override { return base_->weight_dim(w); }
  std::string label(std::size_t w, std::size_t k) const override { return base_->label(w, k) + "*"; }
  const ModulePtr& base() const { return base_; }

 protected:
  Matrix compute_block(const MarginMatrix& a) const override;

 private:
  ModulePtr base_;
};

class TensorModule : public PolyModule {
 public:
  TensorModule(ModulePtr x, ModulePtr y);
  using PolyModule::weight_dim;
  std::size_t weight_dim(std::size_t w) const override { return dims_[w]; }
  std::string label(std::size_t w, std::size_t k) const override;

  struct Piece {
    std::size_t wx, wy, offset;
  };
  const std::vector<Piece>& pieces(std::size_t w) const { return pieces_[w]; }
  const ModulePtr& left() const { return x_; }
  const ModulePtr& right() const { return y_; }

 protected:
  Matrix compute_block(const MarginMatrix& a) const override;

 private:
  ModulePtr x_, y_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Piece>> pieces_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> piece_index_;
};

class DirectSumModule : public PolyModule {
 public:
  explicit DirectSumModule(std::vector<ModulePtr> parts, std::string name = "");
  using PolyModule::weight_dim;
  std::size_t weight_dim(std::size_t w) const override;
  std::string label(std::size_t w, std::size_t k) const override;
  const std::vector<ModulePtr>& parts() const { return parts_; }
  /// Offset of part p inside weight space w.
  std::size_t part_offset(std::size_t p, std::size_t w) const;

 protected:
  Matrix compute_block(const MarginMatrix& a) const override;

 private:
  std::vector<ModulePtr> parts_;
};

ModulePtr dual(ModulePtr x);
ModulePtr tensor_product(ModulePtr x, ModulePtr y);
ModulePtr direct_sum(std::vector<ModulePtr> parts);

/// Equivariant map; blocks[w] has shape target.weight_dim(w) x source.weight_dim(w).
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(ModulePtr source, ModulePtr target, std::vector<Matrix> blocks);
  static ModuleMap zero(ModulePtr source, ModulePtr target);
  static ModuleMap identity(ModulePtr x);

  const ModulePtr& source() const { return src_; }
  const ModulePtr& target() const { return dst_; }
  const Matrix& block(std::size_t w) const { return blocks_[w]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  Matrix dense() const;
  bool is_zero() const;
  bool is_equivariant(GeneratorSet set = GeneratorSet::Auto) const;
  /// Every weight block is square with unit determinant.
  bool is_iso() const;
  std::size_t rank() const;

  friend bool operator==(const ModuleMap& a, const ModuleMap& b) { return a.blocks_ == b.blocks_; }

 private:
  ModulePtr src_, dst_;
  std::vector<Matrix> blocks_;
};

/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const ModuleMap& f, const Scalar& c);
ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const Vector& coeffs);
ModuleMap dual(const ModuleMap& f, ModulePtr dual_source, ModulePtr dual_target);
ModuleMap tensor(const ModuleMap& f, const ModuleMap& g, ModulePtr src, ModulePtr dst);

/// Kernel of f as a submodule of the source (saturated over Z).
std::shared_ptr<const SubModule> kernel(const ModuleMap& f);
/// Image of f as a submodule of the target.
std::shared_ptr<const SubModule> image(const ModuleMap& f);
GradedLattice kernel_lattices(const ModuleMap& f);
GradedLattice image_lattices(const ModuleMap& f);

ModuleMap inclusion(std::shared_ptr<const SubModule> s);
ModuleMap projection(std::shared_ptr<const QuotientModule> q);
/// f : ambient -> Y factored through ambient / sub; throws if f does not vanish on sub.
ModuleMap factor_through(const ModuleMap& f, std::shared_ptr<const QuotientModule> q);
/// f : X -> ambient with image in s, viewed as X -> s; throws otherwise.
ModuleMap corestrict(const ModuleMap& f, std::shared_ptr<const SubModule> s);
/// Map of quotients induced by f : X -> Y with f(sub_X) in sub_Y.
ModuleMap induced_map(const ModuleMap& f, std::shared_ptr<const QuotientModule> qx,
                      std::shared_ptr<const QuotientModule> qy);

// Standard and structural morphisms.

/// gamma_A : Gamma^mu -> Gamma^lambda, the literal composite of
/// comultiplications and multiplications.
ModuleMap standard_morphism_gamma(const MarginMatrix& a, int n, const Ring& ring);
/// sigma_A : Gamma^mu -> S^lambda.
ModuleMap standard_morphism_sigma(const MarginMatrix& a, int n, const Ring& ring);
/// Exterior analogue Lambda^mu -> Lambda^lambda of gamma_A.
ModuleMap standard_morphism_exterior(const MarginMatrix& a, int n, const Ring& ring);
/// gamma_A on a single basis word of Gamma^mu (blocks sorted); returns target words.
std::map<Word, mpz_class> standard_gamma_apply(const MarginMatrix& a, int n, const Word& word);
/// Same maps between given modules (Gamma^mu, Gamma^lambda, S^lambda, Lambda^...).
ModuleMap standard_morphism_gamma(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst);
ModuleMap standard_morphism_sigma(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst);
ModuleMap standard_morphism_exterior(const MarginMatrix& a, WordModulePtr src, WordModulePtr dst);

ModuleMap comult_divided(const Composition& lambda, int n, const Ring& ring);   // Gamma^lambda -> tensor
ModuleMap comult_exterior(const Composition& lambda, int n, const Ring& ring);  // Lambda^lambda -> tensor
ModuleMap mult_symmetric(const Composition& lambda, int n, const Ring& ring);   // tensor -> S^lambda
ModuleMap mult_exterior(const Composition& lambda, int n, const Ring& ring);    // tensor -> Lambda^lambda
/// Tensor factor permutation J'_t = J_{sigma(t)} (sigma one-based).
ModuleMap s_perm(const std::vector<int>& sigma, int n, const Ring& ring);

/// Map Gamma^mu -> Y determined by gen_mu -> y for y in Y_mu.
ModuleMap yoneda_map(WordModulePtr gamma_mu, ModulePtr y, const Vector& y_mu);

// Hom spaces and submodules.

std::vector<ModuleMap> hom_space(ModulePtr x, ModulePtr y, GeneratorSet set = GeneratorSet::Auto);
/// Some isomorphism among combinations of a Hom basis, if one is found.
std::optional<ModuleMap> find_isomorphism(ModulePtr x, ModulePtr y, GeneratorSet set = GeneratorSet::Auto);
std::optional<ModuleMap> find_isomorphism(const std::vector<ModuleMap>& hom_basis);

/// Weight vectors of X (weight index, vector) generate this graded lattice.
GradedLattice submodule_generated(const PolyModule& x, const std::vector<std::pair<std::size_t, Vector>>& vectors,
                                  GeneratorSet set = GeneratorSet::Auto);
GradedLattice zero_lattices(const PolyModule& x);
GradedLattice full_lattices(const PolyModule& x);
GradedLattice sum(const GradedLattice& a, const GradedLattice& b);
GradedLattice intersection(const GradedLattice& a, const GradedLattice& b);
bool contains(const GradedLattice& big, const GradedLattice& small);
std::size_t total_rank(const GradedLattice& l);

/// Submodule generated by X_mu.
GradedLattice trace(const PolyModule& x, const Composition& mu);
/// Common kernel of all maps X -> S^mu.
GradedLattice reject(ModulePtr x, const Composition& mu);
/// Pairing-annihilator in X of a graded lattice of the dual X°.
GradedLattice annihilator(const GradedLattice& l);

bool is_submodule(const PolyModule& x, const GradedLattice& l, GeneratorSet set = GeneratorSet::Auto);

}  // namespace schurq
