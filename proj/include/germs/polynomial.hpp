#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germs/monomial.hpp"
#include "germs/ring.hpp"
#include "germs/scalar.hpp"

namespace germs {

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact multivariate polynomial. Terms are kept strictly descending in the
/// ring's monomial order with no zero coefficients; zero is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, long c);
  static Polynomial variable(const RingPtr& ring, std::size_t i);
  static Polynomial term(const RingPtr& ring, Monomial m, Scalar c);
  /// Sorts, combines like terms and drops zeros.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// A single term (coefficient arbitrary).
  bool is_monomial() const { return terms_.size() == 1; }

  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;
  /// Degree in variable i (0 for the zero polynomial).
  std::uint32_t degree_in(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  /// Leading coefficient normalized to one (zero stays zero).
  Polynomial monic() const;

  /// Coefficient of the given monomial (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  /// Re-expresses the polynomial over `target`; source variable i becomes
  /// target variable var_map[i].
  Polynomial map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  /// Canonical text: descending terms, variables in declared order.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Quotient f/g when g divides f exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Multivariate division: remainder of f modulo the list, with the
/// quotients written into `quotients` when non-null.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  std::vector<Polynomial>* quotients = nullptr);

/// Text for a monomial with coefficient, as used by Polynomial::to_string.
std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace germs
