#pragma once

#include <string>
#include <vector>

#include "germs/groebner.hpp"

namespace germs {

/// Dense one-variable polynomial; coefficient i belongs to t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field f) : field_(f) {}
  UPoly(Field f, std::vector<Scalar> coeffs);
  static UPoly constant(Field f, long c);
  static UPoly monomial(Field f, std::size_t degree);

  /// Reads a polynomial in which only variable `var` occurs.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var = 0);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var = 0) const;

  Field field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  const Scalar& lead() const { return coeffs_.back(); }
  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  /// Text in variable `var`, e.g. "t^2 + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Monic lcm.
UPoly lcm(const UPoly& a, const UPoly& b);

struct UFactor {
  UPoly factor;
  unsigned multiplicity;
};

/// Monic irreducible factorization over Q or GF(p), sorted by degree and
/// then by coefficients. Constants give an empty list.
std::vector<UFactor> factor(const UPoly& f);

/// True when f is non-constant and irreducible over its field.
bool is_irreducible(const UPoly& f);

/// Canonical sort key used for univariate primes and factors.
bool upoly_less(const UPoly& a, const UPoly& b);

/// Structure of A^g / relations over a one-variable ring:
/// A^free_rank ⊕ A/(d_1) ⊕ ... with d_1 | d_2 | ... monic of positive degree.
struct SmithInvariants {
  std::size_t free_rank = 0;
  std::vector<UPoly> invariants;
};

SmithInvariants smith_invariants(const ModulePresentation& m);

}  // namespace germs
