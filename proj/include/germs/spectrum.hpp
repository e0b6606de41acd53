#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "germs/groebner.hpp"
#include "germs/univariate.hpp"

namespace germs {

enum class Flavor { Monomial, Univariate, Finite };

std::string flavor_name(Flavor f);

/// A ring together with the engine that decides questions about its primes.
struct RingContext {
  RingPtr ring;
  Flavor flavor = Flavor::Monomial;
  /// Monomial engine only: treat A as local at the origin (x_1, ..., x_n).
  bool local = false;

  static RingContext monomial(RingPtr ring, bool local = false);
  static RingContext univariate(RingPtr ring);

  friend bool operator==(const RingContext& a, const RingContext& b);
};

/// A prime of a monomial or univariate context. Monomial primes are stored
/// as a variable mask (the empty mask is the zero ideal); univariate primes
/// as a monic irreducible polynomial or zero.
class PrimeIdeal {
 public:
  enum class Kind { Zero, Monomial, Univariate };

  PrimeIdeal() = default;
  static PrimeIdeal zero(const RingContext& ctx);
  static PrimeIdeal monomial(const RingContext& ctx, std::uint64_t mask);
  static PrimeIdeal monomial(const RingContext& ctx, const std::vector<std::string>& vars);
  /// Throws unless f is irreducible; the stored generator is monic.
  static PrimeIdeal univariate(const RingContext& ctx, const UPoly& f);

  const RingContext& context() const { return ctx_; }
  Kind kind() const { return kind_; }
  std::uint64_t mask() const { return mask_; }
  const UPoly& poly() const { return poly_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  /// Maximal among the primes of the context.
  bool is_maximal() const;

  /// Generators in canonical order: variables by index, or the polynomial.
  std::vector<Polynomial> generators() const;
  bool contains(const Polynomial& f) const;

  /// "(x, y)", "(t^2 + 1)" or "(0)".
  std::string to_string() const;

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b);
  /// Canonical order: by height, then variables / coefficients.
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);

 private:
  RingContext ctx_;
  Kind kind_ = Kind::Zero;
  std::uint64_t mask_ = 0;
  UPoly poly_;
};

/// p ⊆ q.
bool specializes(const PrimeIdeal& p, const PrimeIdeal& q);

/// All 2^n monomial primes of a monomial context, canonical order.
std::vector<PrimeIdeal> all_monomial_primes(const RingContext& ctx);

/// A submodule of E_p presented by elements of E (denominators cleared).
struct LocalizedSubmodule {
  PrimeIdeal prime;
  std::size_t rank = 0;
  std::vector<ModuleElement> generators;

  Submodule span() const;
  std::string to_string() const;
};

/// True when S is Z^n-graded for some degree shifts of the basis vectors.
/// Monomial-engine localization is only exact on such submodules.
bool is_multigraded(const Submodule& s);

/// i_p^{-1}(S_p) ⊂ E.
Submodule contract(const Submodule& s, const PrimeIdeal& p);
Submodule contract(const LocalizedSubmodule& jp);

/// S_p, presented by the generators of its contraction.
LocalizedSubmodule localize(const Submodule& s, const PrimeIdeal& p);

/// Localizes a stalk at q further down to p ⊆ q.
LocalizedSubmodule localize_down(const LocalizedSubmodule& jq, const PrimeIdeal& p);

bool stalk_equal(const LocalizedSubmodule& a, const LocalizedSubmodule& b);

/// {m ∈ A^g : s*m ∈ relations for some s ∉ p}; its image in M is ker(i_p).
Submodule kernel_of_localization(const ModulePresentation& m, const PrimeIdeal& p);

/// Element outside p that kills the p-irrelevant torsion of E/S: saturating
/// S by it computes the contraction (univariate engine).
Polynomial univariate_separator(const Submodule& s, const PrimeIdeal& p);

}  // namespace germs
