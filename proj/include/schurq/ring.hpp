#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurq {

/// Exact scalar. Integers and residues are stored with denominator 1.
using Scalar = mpq_class;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, PrimeField };

/// The commutative base ring of a computation: Z, Q or F_p.
class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring prime_field(long p);

  /// Accepts "Z", "Q", "Fp:<p>" and the short form "F<p>".
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  long characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  std::string name() const;

  /// Canonical representative; residues land in [0, p).
  Scalar reduce(const Scalar& x) const;
  bool is_unit(const Scalar& x) const;
  Scalar inverse(const Scalar& x) const;
  /// Exact quotient a/b; throws when b does not divide a in the ring.
  Scalar divide(const Scalar& a, const Scalar& b) const;
  /// Euclidean quotient used by row reduction (floor division over Z).
  Scalar euclid_quotient(const Scalar& a, const Scalar& b) const;
  bool divides(const Scalar& b, const Scalar& a) const;

  std::string format(const Scalar& x) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  Ring(RingKind kind, long p) : kind_(kind), p_(p) {}
  RingKind kind_ = RingKind::Rationals;
  long p_ = 0;
};

bool is_prime(long p);

}  // namespace schurq
