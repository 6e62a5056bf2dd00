#pragma once

#include <memory>
#include <vector>

#include "schurq/polyfun.hpp"

namespace schurq {

/// W_lambda or S_lambda as the image of a composite of word modules, with the
/// tableau basis. For W_lambda the source is Gamma^lambda and the ambient is
/// Lambda^{lambda'}; for S_lambda they are Lambda^{lambda'} and S^lambda.
struct WeylConstruction {
  Partition lambda;
  int n = 0;
  WordModulePtr source;
  WordModulePtr ambient;
  /// Weight bases are the images of v_T, T semistandard.
  std::shared_ptr<const SubModule> module;
  ModuleMap composite;  // source -> ambient
  ModuleMap cover;      // source -> module
  /// Tableaux in the flat order of module's basis.
  std::vector<Filling> tableau_basis;
};

/// v_T in Gamma^lambda (row i becomes block i) and hat v_T in Lambda^{lambda'}
/// (column j becomes block j). Letters are entries minus one.
Word row_word(const Filling& t);
Word column_word(const Filling& t);

WeylConstruction weyl(const Partition& lambda, int n, const Ring& ring);
WeylConstruction schur_construction(const Partition& lambda, int n, const Ring& ring);
ModulePtr schur_module(const Partition& lambda, int n, const Ring& ring);

/// Product of (n + j - i) / hook over the boxes of lambda.
std::int64_t hook_content(const Partition& lambda, int n);

/// Partitions of d with at most n parts, padded to length n.
std::vector<Composition> weight_partitions(int d, int n);

struct StandardObject {
  Partition lambda;
  WordModulePtr gamma;
  GradedLattice U;  // sum of tr_mu Gamma^lambda over mu not dominated by lambda
  std::shared_ptr<const QuotientModule> quotient;
  ModuleMap canonical_epi;
};

/// Throws std::runtime_error over Z if the quotient has torsion.
StandardObject standard_object(const Partition& lambda, int n, const Ring& ring);
/// The isomorphism Delta(lambda) -> W_lambda induced by the two covers; throws if it is not one.
ModuleMap standard_to_weyl(const StandardObject& delta, const WeylConstruction& w);

struct Relation {
  int i = 0, t = 0;  // one-based row, 1 <= t <= lambda_{i+1}
  Composition source;
  MarginMatrix a;
};

struct PresentationData {
  Partition lambda;
  std::vector<Relation> relations;
};

PresentationData presentation(const Partition& lambda);

struct RealizedPresentation {
  PresentationData data;
  WordModulePtr p0;
  std::vector<WordModulePtr> summands;
  ModulePtr p1;
  ModuleMap alpha;  // p1 -> p0
  std::shared_ptr<const QuotientModule> cokernel;
};

RealizedPresentation realize_presentation(const Partition& lambda, int n, const Ring& ring);

struct CostandardObject {
  Partition lambda;
  WordModulePtr symmetric;
  std::shared_ptr<const SubModule> module;
  ModuleMap inclusion;
};

CostandardObject costandard_object(const Partition& lambda, int n, const Ring& ring);

struct SimpleHead {
  Partition lambda;
  StandardObject delta;
  GradedLattice radical;  // inside delta.quotient, zero in weight lambda
  std::shared_ptr<const QuotientModule> module;
};

/// L(lambda) = Delta(lambda) / rej_lambda Delta(lambda). Fields only; needs n >= len(lambda).
SimpleHead simple_head(const Partition& lambda, int n, const Ring& field);

}  // namespace schurq
