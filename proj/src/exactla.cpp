#include "schurq/exactla.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace schurq {

namespace {

bool less_abs(const Scalar& a, const Scalar& b) { return cmp(abs(a), abs(b)) < 0; }

// Row reduction over F_p on machine words.
Matrix rref_modp(const Matrix& m, long p) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::int64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      mpz_class x = m(i, j).get_num() % p;
      if (m(i, j).get_den() != 1) throw RingError("non-reduced entry in F_p matrix");
      long v = x.get_si();
      a[i * C + j] = v < 0 ? v + p : v;
    }
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    std::int64_t s = inv(a[r * C + c]);
    for (std::size_t j = c; j < C; ++j) a[r * C + j] = a[r * C + j] * s % p;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::int64_t f = a[i * C + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < C; ++j) {
        a[i * C + j] = (a[i * C + j] - f * a[r * C + j]) % p;
        if (a[i * C + j] < 0) a[i * C + j] += p;
      }
    }
    ++r;
  }
  Matrix out(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = Scalar(static_cast<long>(a[i * C + j]));
  return out;
}

Matrix rref_q(const Matrix& m) {
  Matrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(r, j));
    Scalar s = 1 / a(r, c);
    for (std::size_t j = c; j < C; ++j) a(r, j) *= s;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a.block(0, r, 0, C);
}

Matrix hnf_z(const Matrix& m) {
  Matrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  auto sub_row = [&](std::size_t i, std::size_t k, const Scalar& q, std::size_t c0) {
    for (std::size_t j = c0; j < C; ++j)
      if (a(k, j) != 0) a(i, j) -= q * a(k, j);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    for (;;) {
      std::size_t best = R;
      for (std::size_t i = r; i < R; ++i)
        if (a(i, c) != 0 && (best == R || less_abs(a(i, c), a(best, c)))) best = i;
      if (best == R) break;
      if (best != r)
        for (std::size_t j = 0; j < C; ++j) std::swap(a(best, j), a(r, j));
      bool clean = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (a(i, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_num_mpz_t(), a(r, c).get_num_mpz_t());
        sub_row(i, r, Scalar(q), c);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= R || a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < C; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      if (a(i, c) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_num_mpz_t(), a(r, c).get_num_mpz_t());
      if (q != 0) sub_row(i, r, Scalar(q), c);
    }
    ++r;
  }
  return a.block(0, r, 0, C);
}

}  // namespace

Vector SmithForm::diagonal() const {
  Vector d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm snf(const Matrix& m, const Ring& ring) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithForm f{m.reduced(ring), Matrix::identity(R), Matrix::identity(C), Matrix::identity(C), 0};
  Matrix& A = f.S;
  const bool fp = ring.kind() == RingKind::PrimeField;
  auto red = [&](Scalar& x) {
    if (fp) x = ring.reduce(x);
  };
  // row_i -= q row_k
  auto row_op = [&](std::size_t i, std::size_t k, const Scalar& q) {
    for (std::size_t j = 0; j < C; ++j)
      if (A(k, j) != 0) A(i, j) -= q * A(k, j), red(A(i, j));
    for (std::size_t j = 0; j < R; ++j)
      if (f.U(k, j) != 0) f.U(i, j) -= q * f.U(k, j), red(f.U(i, j));
  };
  // col_j -= q col_k
  auto col_op = [&](std::size_t j, std::size_t k, const Scalar& q) {
    for (std::size_t i = 0; i < R; ++i)
      if (A(i, k) != 0) A(i, j) -= q * A(i, k), red(A(i, j));
    for (std::size_t i = 0; i < C; ++i)
      if (f.V(i, k) != 0) f.V(i, j) -= q * f.V(i, k), red(f.V(i, j));
    for (std::size_t l = 0; l < C; ++l)
      if (f.Vinv(j, l) != 0) f.Vinv(k, l) += q * f.Vinv(j, l), red(f.Vinv(k, l));
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < C; ++j) std::swap(A(i, j), A(k, j));
    for (std::size_t j = 0; j < R; ++j) std::swap(f.U(i, j), f.U(k, j));
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < R; ++i) std::swap(A(i, j), A(i, k));
    for (std::size_t i = 0; i < C; ++i) std::swap(f.V(i, j), f.V(i, k));
    for (std::size_t l = 0; l < C; ++l) std::swap(f.Vinv(j, l), f.Vinv(k, l));
  };

  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    std::size_t bi = R, bj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (A(i, j) != 0 && (bi == R || (!ring.is_field() && less_abs(A(i, j), A(bi, bj))))) bi = i, bj = j;
    if (bi == R) break;
    row_swap(t, bi);
    col_swap(t, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A(i, t) == 0) continue;
        row_op(i, t, ring.euclid_quotient(A(i, t), A(t, t)));
        if (A(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A(t, j) == 0) continue;
        col_op(j, t, ring.euclid_quotient(A(t, j), A(t, t)));
        if (A(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      bool fixed = false;
      if (!ring.is_field()) {
        for (std::size_t i = t + 1; i < R && !fixed; ++i)
          for (std::size_t j = t + 1; j < C; ++j)
            if (!ring.divides(A(t, t), A(i, j))) {
              row_op(t, i, Scalar(-1));
              fixed = true;
              break;
            }
      }
      if (!fixed) break;
    }
    Scalar s = 1;
    if (ring.is_field())
      s = ring.inverse(A(t, t));
    else if (A(t, t) < 0)
      s = -1;
    if (s != 1) {
      for (std::size_t j = 0; j < C; ++j) A(t, j) *= s, red(A(t, j));
      for (std::size_t j = 0; j < R; ++j) f.U(t, j) *= s, red(f.U(t, j));
    }
  }
  f.rank = t;
  return f;
}

Matrix row_canonical(const Matrix& m, const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return hnf_z(m);
    case RingKind::Rationals: return rref_q(m);
    case RingKind::PrimeField: return rref_modp(m.reduced(ring), ring.characteristic());
  }
  return m;
}

std::size_t rank(const Matrix& m, const Ring& ring) {
  if (ring.kind() == RingKind::Integers) return rref_q(m).rows();
  return row_canonical(m, ring).rows();
}

Lattice::Lattice(std::size_t ambient, const Matrix& generators, const Ring& ring)
    : ambient_(ambient), ring_(ring) {
  if (generators.rows() > 0 && generators.cols() != ambient)
    throw std::invalid_argument("lattice generators have wrong width");
  basis_ = generators.rows() ? row_canonical(generators, ring) : Matrix(0, ambient);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t j = 0;
    while (basis_(i, j) == 0) ++j;
    pivots_.push_back(j);
  }
}

Lattice Lattice::zero(std::size_t ambient, const Ring& ring) { return Lattice(ambient, Matrix(0, ambient), ring); }

Lattice Lattice::full(std::size_t ambient, const Ring& ring) {
  return Lattice(ambient, Matrix::identity(ambient), ring);
}

std::optional<Vector> Lattice::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
  Vector w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = ring_.reduce(v[j]);
  Vector c(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    std::size_t p = pivots_[k];
    for (std::size_t j = (k ? pivots_[k - 1] + 1 : 0); j < p; ++j)
      if (w[j] != 0) return std::nullopt;
    if (w[p] == 0) continue;
    if (!ring_.divides(basis_(k, p), w[p])) return std::nullopt;
    c[k] = ring_.divide(w[p], basis_(k, p));
    for (std::size_t j = p; j < ambient_; ++j)
      if (basis_(k, j) != 0) w[j] = ring_.reduce(w[j] - c[k] * basis_(k, j));
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  return c;
}

bool Lattice::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

Lattice row_lattice(const Matrix& m, const Ring& ring) { return Lattice(m.cols(), m, ring); }

Lattice kernel_basis(const Matrix& m, const Ring& ring) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0) return Lattice::zero(0, ring);
  // Canonical form of [M | I]; rows whose M-part vanishes span the left kernel.
  Matrix aug = hstack(m.reduced(ring), Matrix::identity(R));
  Matrix h = row_canonical(aug, ring);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < C && zero; ++j) zero = h(i, j) == 0;
    if (!zero) continue;
    Vector v(R);
    for (std::size_t j = 0; j < R; ++j) v[j] = h(i, C + j);
    rows.push_back(std::move(v));
  }
  return Lattice(R, Matrix::from_rows(rows, R), ring);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("lattice_sum: ambient mismatch");
  return Lattice(a.ambient_rank(), vstack(a.basis(), b.basis()), a.ring());
}

bool lattice_membership(const Vector& v, const Lattice& l) { return l.contains(v); }

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("lattice_intersection: ambient mismatch");
  const Ring& ring = a.ring();
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.ambient_rank(), ring);
  Matrix stacked = vstack(a.basis(), scale(b.basis(), Scalar(-1), ring));
  Lattice k = kernel_basis(stacked, ring);
  Matrix left = k.basis().block(0, k.rank(), 0, a.rank());
  return Lattice(a.ambient_rank(), multiply(left, a.basis(), ring), ring);
}

Lattice saturation(const Lattice& l) {
  if (l.ring().is_field() || l.rank() == 0) return l;
  SmithForm f = snf(l.basis(), l.ring());
  return Lattice(l.ambient_rank(), f.Vinv.block(0, f.rank, 0, l.ambient_rank()), l.ring());
}

Lattice annihilator(const Lattice& l) {
  if (l.rank() == 0) return Lattice::full(l.ambient_rank(), l.ring());
  return kernel_basis(l.basis().transpose(), l.ring());
}

FGModulePresentation quotient_presentation(std::size_t ambient_rank, const Lattice& sub) {
  if (sub.ambient_rank() != ambient_rank) throw std::invalid_argument("quotient_presentation: ambient mismatch");
  FGModulePresentation p;
  p.free_rank = ambient_rank - sub.rank();
  if (sub.ring().is_field() || sub.rank() == 0) return p;
  SmithForm f = snf(sub.basis(), sub.ring());
  for (std::size_t i = 0; i < f.rank; ++i)
    if (!sub.ring().is_unit(f.S(i, i))) p.invariant_factors.push_back(f.S(i, i));
  return p;
}

Frame::Frame(const Matrix& basis, const Ring& ring) : ring_(ring), n_(basis.cols()), basis_(basis) {
  SmithForm f = snf(basis, ring);
  r_ = f.rank;
  if (r_ != basis.rows()) throw std::invalid_argument("Frame: basis rows are not independent");
  for (std::size_t i = 0; i < r_; ++i)
    if (!ring.is_unit(f.S(i, i))) {
      torsion_free_ = false;
      factors_.push_back(f.S(i, i));
    }
  proj_ = f.V.block(0, n_, r_, n_);
  lift_ = f.Vinv.block(r_, n_, 0, n_);
  Matrix vr = f.V.block(0, n_, 0, r_);
  const Ring rat = ring.kind() == RingKind::PrimeField ? ring : Ring::rationals();
  for (std::size_t j = 0; j < r_; ++j) {
    Scalar inv = ring.is_field() ? ring.inverse(f.S(j, j)) : Scalar(1) / f.S(j, j);
    for (std::size_t i = 0; i < n_; ++i) vr(i, j) = rat.reduce(vr(i, j) * inv);
  }
  section_ = multiply(vr, f.U, rat);
}

Vector Frame::sub_coordinates(const Vector& x) const {
  Vector c = vec_mul(x, section_, ring_.kind() == RingKind::PrimeField ? ring_ : Ring::rationals());
  for (auto& v : c) v = ring_.reduce(v);
  return c;
}

Vector Frame::quotient_coordinates(const Vector& x) const { return vec_mul(x, proj_, ring_); }

}  // namespace schurq
