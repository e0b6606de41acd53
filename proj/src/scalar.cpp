#include "germs/scalar.hpp"

#include "germs/error.hpp"

namespace germs {

namespace {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_small_prime(p)) throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
  if (p > 65521) throw Error("GF(p): modulus too large (limit 65521)");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

Scalar::Scalar(Field f, long v) : field_(f), value_(v) { normalize(); }

Scalar::Scalar(Field f, const mpq_class& v) : field_(f), value_(v) { normalize(); }

void Scalar::normalize() {
  if (field_.is_rational()) {
    value_.canonicalize();
    return;
  }
  const mpz_class p = field_.characteristic();
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw Error("denominator vanishes in " + field_.name());
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  if (num < 0) num += p;
  value_ = mpq_class(num);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  if (!field_.is_rational()) r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  if (!field_.is_rational()) {
    const unsigned long p = field_.characteristic();
    if (value_ >= p) value_ -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  if (!field_.is_rational() && value_ < 0) value_ += field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  if (!field_.is_rational()) normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero in " + field_.name());
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
    r.value_.canonicalize();
  } else {
    mpz_class inv;
    const mpz_class p = field_.characteristic();
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
    r.value_ = mpq_class(inv);
  }
  return r;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return value_.get_str();
  const long p = field_.characteristic();
  long v = value_.get_num().get_si();
  if (2 * v > p) v -= p;
  return std::to_string(v);
}

bool Scalar::prints_negative() const {
  if (field_.is_rational()) return value_ < 0;
  const long p = field_.characteristic();
  return 2 * value_.get_num().get_si() > p;
}

}  // namespace germs
