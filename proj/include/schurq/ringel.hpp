#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurq/hwc.hpp"

namespace schurq {

/// Lambda^d (x)_{Gamma^d} f for f : Gamma^mu -> Gamma^lambda. f is written in the
/// gamma_A basis through the image of gen_mu and each gamma_A becomes its exterior analogue.
ModuleMap lambda_tensor_on_projectives(const ModuleMap& f);
/// Coordinates of f in the basis gamma_A, A running over divided_label_matrix of Gamma^lambda_mu.
std::vector<std::pair<MarginMatrix, Scalar>> gamma_coordinates(const ModuleMap& f);

/// Cokernel of the exterior image of a projective presentation.
struct LambdaTensor {
  ModulePtr p0, p1;
  ModuleMap relations;  // p1 -> p0
  std::shared_ptr<const QuotientModule> module;
};
LambdaTensor lambda_tensor(const Presented& x);

/// Structure constants of an endomorphism algebra with a basis of maps between summands.
struct EndAlgebra {
  struct Element {
    std::size_t from, to;  // summand indices
    ModuleMap map;
  };
  std::vector<Element> basis;
  /// product[a][b] = coordinates of basis[a] o basis[b] (empty when the summands do not chain).
  std::vector<std::vector<Vector>> product;
  std::size_t dim() const { return basis.size(); }
};
EndAlgebra end_algebra(const std::vector<ModulePtr>& summands);

struct TiltingObject {
  int n = 0, d = 0;
  Ring ring = Ring::rationals();
  std::vector<Partition> order;
  std::map<Partition, WordModulePtr> summands;
  std::map<Partition, FiltrationChain> delta, nabla;
  std::vector<std::vector<Ext1Value>> ext;  // Ext^1(Lambda^order[i], Lambda^order[j])
  EndAlgebra endo;
  std::vector<std::string> failures;
  std::size_t rank() const;
  bool pass() const { return failures.empty(); }
};
TiltingObject tilting_object(int n, int d, const Ring& ring);

struct RingelReport {
  int n = 0, d = 0;
  Ring ring = Ring::rationals();
  std::size_t dim_end_gamma = 0, dim_end_lambda = 0;
  bool bijective = false;
  bool multiplicative = false;
  std::size_t pairs_checked = 0;
  bool standard_correspondence = false;
  /// multiplicity of Delta(lambda) in Gamma^mu and of nabla(lambda') in Lambda^mu, keyed (mu, lambda).
  std::map<std::pair<Partition, Partition>, std::pair<std::size_t, std::size_t>> multiplicities;
  std::vector<std::string> failures;
  bool pass() const { return bijective && multiplicative && standard_correspondence && failures.empty(); }
};
RingelReport ringel_self_duality_check(int n, int d, const Ring& ring);

}  // namespace schurq
