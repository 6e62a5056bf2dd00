#include "schurq/ring.hpp"

#include <charconv>

namespace schurq {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Ring Ring::prime_field(long p) {
  if (!is_prime(p)) throw RingError("not a prime: " + std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z" || text == "ZZ") return integers();
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f'))
    digits = text.substr(1);
  else
    throw RingError("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp:<prime>)");
  long p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw RingError("malformed prime in ring '" + std::string(text) + "'");
  return prime_field(p);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

namespace {

mpz_class mod_p(const mpz_class& a, long p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Scalar Ring::reduce(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Rationals: return x;
    case RingKind::Integers:
      if (x.get_den() != 1) throw RingError("non-integral value " + x.get_str() + " in Z");
      return x;
    case RingKind::PrimeField: {
      mpz_class num = mod_p(x.get_num(), p_);
      if (x.get_den() == 1) return Scalar(num);
      mpz_class den = mod_p(x.get_den(), p_);
      if (den == 0) throw RingError("denominator divisible by p in " + x.get_str());
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
      return Scalar(mod_p(num * inv, p_));
    }
  }
  return x;
}

bool Ring::is_unit(const Scalar& x) const {
  if (kind_ == RingKind::Integers) return x == 1 || x == -1;
  return reduce(x) != 0;
}

Scalar Ring::inverse(const Scalar& x) const {
  if (!is_unit(x)) throw RingError("not a unit: " + x.get_str());
  if (kind_ == RingKind::Integers) return x;
  if (kind_ == RingKind::Rationals) return 1 / x;
  return reduce(Scalar(1) / reduce(x));
}

bool Ring::divides(const Scalar& b, const Scalar& a) const {
  if (kind_ != RingKind::Integers) return b != 0 || a == 0;
  if (b == 0) return a == 0;
  return mpz_divisible_p(a.get_num_mpz_t(), b.get_num_mpz_t()) != 0;
}

Scalar Ring::divide(const Scalar& a, const Scalar& b) const {
  if (!divides(b, a)) throw RingError(b.get_str() + " does not divide " + a.get_str());
  if (a == 0) return Scalar(0);
  if (kind_ == RingKind::Integers) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return Scalar(q);
  }
  if (kind_ == RingKind::Rationals) return a / b;
  return reduce(a * inverse(b));
}

Scalar Ring::euclid_quotient(const Scalar& a, const Scalar& b) const {
  if (kind_ != RingKind::Integers) return divide(a, b);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  return Scalar(q);
}

std::string Ring::format(const Scalar& x) const {
  Scalar r = reduce(x);
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace schurq
