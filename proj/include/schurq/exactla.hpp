#pragma once

#include <optional>
#include <vector>

#include "schurq/matrix.hpp"

namespace schurq {

/// U * M * V = S with S diagonal and successive divisibility.
struct SmithForm {
  Matrix S, U, V, Vinv;
  std::size_t rank = 0;
  Vector diagonal() const;
};

SmithForm snf(const Matrix& m, const Ring& ring);

/// Hermite form over Z, reduced row echelon form over a field. Zero rows dropped.
Matrix row_canonical(const Matrix& m, const Ring& ring);
std::size_t rank(const Matrix& m, const Ring& ring);

/// Submodule of ring^n spanned by the rows of a canonical basis.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient, const Matrix& generators, const Ring& ring);
  static Lattice zero(std::size_t ambient, const Ring& ring);
  static Lattice full(std::size_t ambient, const Ring& ring);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const Ring& ring() const { return ring_; }
  bool contains(const Vector& v) const;
  bool contains(const Lattice& other) const;
  /// Coordinates against basis(), when v lies in the lattice.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  Ring ring_;
  std::vector<std::size_t> pivots_;
};

/// Left kernel {x : x M = 0}; saturated over Z.
Lattice kernel_basis(const Matrix& m, const Ring& ring);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
bool lattice_membership(const Vector& v, const Lattice& l);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);
Lattice saturation(const Lattice& l);
/// {y : <x, y> = 0 for all x in l}.
Lattice annihilator(const Lattice& l);
/// Row space of a matrix as a lattice.
Lattice row_lattice(const Matrix& m, const Ring& ring);

struct FGModulePresentation {
  std::size_t free_rank = 0;
  std::vector<Scalar> invariant_factors;
  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_free() const { return invariant_factors.empty(); }
  friend bool operator==(const FGModulePresentation&, const FGModulePresentation&) = default;
};

FGModulePresentation quotient_presentation(std::size_t ambient_rank, const Lattice& sub);

/// Adapted coordinates for a full-row-rank B (r x n) inside ring^n.
/// Columns of proj give coordinates on the free part of ring^n / rowspace(B);
/// rows of lift are preimages of those coordinates. section sends x in
/// rowspace(B) to c with x = c B.
class Frame {
 public:
  Frame(const Matrix& basis, const Ring& ring);

  std::size_t ambient() const { return n_; }
  std::size_t sub_rank() const { return r_; }
  std::size_t quotient_rank() const { return n_ - r_; }
  bool torsion_free() const { return torsion_free_; }
  const std::vector<Scalar>& invariant_factors() const { return factors_; }
  const Matrix& proj() const { return proj_; }
  const Matrix& lift() const { return lift_; }
  const Matrix& section() const { return section_; }
  const Matrix& basis() const { return basis_; }
  Vector sub_coordinates(const Vector& x) const;
  Vector quotient_coordinates(const Vector& x) const;

 private:
  Ring ring_;
  std::size_t n_ = 0, r_ = 0;
  bool torsion_free_ = true;
  std::vector<Scalar> factors_;
  Matrix basis_, proj_, lift_, section_;
};

}  // namespace schurq
