#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "schurq/weylschur.hpp"

namespace schurq {

// Hom and Ext^1.

/// Rank of Hom(X, Y); for X = Gamma^mu this is the rank of Y_mu.
std::size_t hom_rank(ModulePtr x, ModulePtr y);
/// Hom(Delta(lambda), Y) as the lattice of y in Y_lambda killed by every relation of the presentation.
Lattice hom_from_standard(const Partition& lambda, const PolyModule& y);

/// X = P0 / omega with P0 a sum of divided powers; p1 -> p0 has image omega when present.
struct Presented {
  ModulePtr object;
  std::vector<WordModulePtr> p0_parts;
  ModulePtr p0;
  GradedLattice omega;
  std::vector<WordModulePtr> p1_parts;
  ModulePtr p1;
  ModuleMap relations;  // p1 -> p0
};

Presented present_standard(const Partition& lambda, int n, const Ring& ring);
Presented present_projective(const Composition& mu, int n, const Ring& ring);
/// Cover of an arbitrary module by divided powers on weight vectors, and a cover of the syzygy.
Presented present(ModulePtr x);

enum class ExtRoute { Presentation, Syzygy };

struct Ext1Value {
  FGModulePresentation value;
  bool is_zero() const { return value.is_zero(); }
};

Ext1Value ext1(const Presented& x, ModulePtr y, ExtRoute route = ExtRoute::Presentation);

// Filtrations.

struct FiltrationStep {
  Partition lambda;
  std::size_t multiplicity = 0;  // copies of the model in the factor
  GradedLattice sub;             // F_lambda inside the ambient
  std::size_t factor_rank = 0;
  ModulePtr model;               // sum of copies of Delta(lambda), null when the factor is zero
  ModuleMap witness;             // model -> factor
  bool verified = false;
};

/// Steps run bottom first; each sub contains the previous one.
struct FiltrationChain {
  ModulePtr ambient;
  std::vector<FiltrationStep> steps;
  bool complete = false;
  std::string failure;
};

/// Gamma^d(V (x) W) for V = k^a, W = k^b, as a module in V. Letter (i, j) is i * b + j.
WordModulePtr cauchy_ambient(int a, int b, int d, const Ring& ring);
/// The same words graded by W.
WordModulePtr cauchy_ambient_w(int a, int b, int d, const Ring& ring);

/// psi^lambda(x (x) y) for block-sorted words x over k^a and y over k^b.
std::map<Word, mpz_class> psi_apply(const Partition& lambda, int a, int b, const Word& x, const Word& y);
/// psi^lambda as a matrix from Gamma^lambda(V) (x) Gamma^lambda(W) (kron of flat bases) to the flat
/// basis of cauchy_ambient.
Matrix psi_map(const Partition& lambda, int a, int b, const Ring& ring);

FiltrationChain cauchy_filtration(int a, int b, int d, const Ring& ring);
/// Filtration of Gamma^mu(k^n) with factors Delta(lambda)^{K_lambda,mu}, lambda >= mu lex.
FiltrationChain cauchy_filtration_projective(const Composition& mu, int n, const Ring& ring);

/// Greedy peel by lex-largest partition weight. On failure, complete is false and failure explains.
FiltrationChain delta_filtration(ModulePtr x);
/// Delta filtration of the dual; X is in Filt(nabla) iff X° is in Filt(Delta).
FiltrationChain nabla_filtration(ModulePtr x);

// Highest weight certificate.

struct AxiomCheck {
  bool pass = false;
  std::vector<std::string> evidence;
};

struct HwcCertificate {
  int n = 0, d = 0;
  std::string ring;
  std::vector<Partition> order;  // lex descending
  AxiomCheck endo_k, hom_vanishing, kernel_filtration, projective_generator;
  /// ext_table[i][j] = Ext^1(Delta(order[i]), nabla(order[j])).
  std::vector<std::vector<FGModulePresentation>> ext_table;
  /// Ext^1(Delta(order[i]), Delta(order[j])).
  std::vector<std::vector<FGModulePresentation>> ext_delta;
  bool ext_pass = false;
  bool pass() const;
};

HwcCertificate verify_hwc(int n, int d, const Ring& ring);

std::string format_presentation(const FGModulePresentation& p, const Ring& ring);

}  // namespace schurq
