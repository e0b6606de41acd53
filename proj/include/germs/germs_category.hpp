#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germs/germ_family.hpp"
#include "germs/sections_glue.hpp"

namespace germs {

/// numerator / denominator, the denominator a unit at the relevant prime.
struct GermMap {
  Matrix numerator;
  Polynomial denominator;
};

/// σ_{x,y}: S(y)_x → S(x) for primes[x] ⊊ primes[y].
struct Transition {
  std::size_t x = 0, y = 0;
  GermMap map;
};

/// An object of GermsCoh on a finite poset of primes. S(x) is the
/// localization at primes[x] of the module stalks[x].
struct GermsCohObject {
  RingContext context;
  std::vector<PrimeIdeal> primes;
  std::vector<ModulePresentation> stalks;
  std::vector<Transition> sigma;
  /// Non-empty when the primes outside the poset follow a named pattern.
  std::string pattern;

  const Transition* find(std::size_t x, std::size_t y) const;
  std::string label(std::size_t i) const { return primes[i].to_string(); }
};

/// One map per prime, indexed like the object's primes.
struct GermsCohMorphism {
  std::vector<GermMap> maps;
};

struct ObjectCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Every comparable pair has a transition, each transition is well defined
/// and invertible over the smaller localization.
ObjectCheck validate_object(const GermsCohObject& s);

struct CocycleReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  /// (x0, x1, x2) of the first failing chain.
  std::vector<std::string> violation;
};

CocycleReport cocycle_check(const GermsCohObject& s, unsigned jobs = 1);

GermsCohObject pi_star(const RingContext& ctx, const ModulePresentation& e, const std::vector<PrimeIdeal>& primes);
GermsCohMorphism pi_star(const Matrix& phi, std::size_t nprimes);

/// Pointwise composite a ∘ b.
GermsCohMorphism compose(const GermsCohMorphism& a, const GermsCohMorphism& b);

/// a and b agree as maps S(x) → T(x) at every prime.
bool same_morphism(const GermsCohObject& t, const GermsCohMorphism& a, const GermsCohMorphism& b);

struct NaturalityReport {
  bool pass = true;
  std::string smaller, larger;
  std::string reason;
};

/// Each ψ(x) is a map S(x) → T(x) and ψ(x) ∘ σ^S_{x,y} = σ^T_{x,y} ∘ ψ(y).
NaturalityReport naturality_check(const GermsCohObject& s, const GermsCohObject& t, const GermsCohMorphism& psi);

struct BSetReport {
  AssSet primes;
  FinitenessReport::Verdict verdict = FinitenessReport::Verdict::Finite;
  std::string note;
};

/// Primes x of the poset with m_x associated to S(x).
BSetReport b_set(const GermsCohObject& s);

struct FullyFaithfulResult {
  NaturalityReport naturality;
  std::optional<Matrix> phi;
  /// Localizing φ reproduces ψ at every prime.
  bool reproduces = false;
  /// Gluing from the reversed germ order gives the same map.
  bool unique = false;
};

/// Recovers φ: E → F from a morphism ψ: π*E → π*F over `obj_e`/`obj_f`.
FullyFaithfulResult fully_faithful_check(const ModulePresentation& e, const ModulePresentation& f,
                                         const GermsCohObject& obj_e, const GermsCohObject& obj_f,
                                         const GermsCohMorphism& psi, unsigned jobs = 1);

/// μ(M_p) = dim M_p / p M_p (monomial or univariate primes; the zero prime
/// gives the generic rank).
std::size_t minimal_generators(const ModulePresentation& m, const PrimeIdeal& p);
/// μ at the rational point `point` (one coordinate per variable).
std::size_t minimal_generators_at_point(const ModulePresentation& m, const std::vector<long>& point);

/// Rank of a polynomial matrix over the fraction field.
std::size_t generic_rank(const Matrix& a);

/// Maximal-ideal pattern on k[t1..tn] over the poset of monomial primes, with the
/// transitions induced by the ambient ring.
GermsCohObject maximal_ideal_object(unsigned n);

struct ObstructionReport {
  unsigned n = 0;
  std::vector<std::vector<long>> points;
  std::vector<std::size_t> mu;
  std::size_t generic_rank = 0;
  bool obstruction = false;
  std::string summary;
};

/// μ(J(x)) at sampled closed points against the generic rank. A demo of a
/// necessary condition, not a proof of nonexistence.
ObstructionReport maximal_ideal_obstruction(unsigned n);

/// The same μ test for an object: μ at every maximal prime of the poset
/// against μ at the zero prime.
ObstructionReport mu_obstruction(const GermsCohObject& s);

}  // namespace germs
