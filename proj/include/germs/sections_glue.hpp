#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germs/ass.hpp"

namespace germs {

/// numerator / denominator in M_p, with the denominator outside p.
struct Germ {
  PrimeIdeal prime;
  ModuleElement numerator;
  Polynomial denominator;
};

struct GermSectionFamily {
  RingContext context;
  ModulePresentation module;
  std::vector<Germ> germs;
};

/// U = X - Z(t) - union of Z(r) over the primes r of Ass(M) not inside the
/// base prime.
struct OpenSetDescription {
  PrimeIdeal base;
  Polynomial denominator;
  AssSet removed;

  bool contains(const PrimeIdeal& p) const;
  std::string to_string() const;
};

struct GlueResult {
  bool exists = false;
  /// Normal form of the glued element modulo the relations.
  ModuleElement section;
  std::vector<OpenSetDescription> opens;
  /// Explanation when no section exists.
  std::string reason;
};

/// The unique v ∈ M with i_p(v) = s(p) at every listed prime. The list must
/// cover Ass(M); inconsistent germs throw PreconditionError naming the pair.
GlueResult glue_section(const GermSectionFamily& fam, unsigned jobs = 1);

/// i_p(v) = numerator / denominator in M_p.
bool germ_matches(const ModulePresentation& m, const Germ& g, const ModuleElement& v);

struct InjectivityReport {
  bool injective = true;
  /// Primes of Ass(M) inside c.
  AssSet primes;
  std::optional<ModuleElement> witness;
};

/// Checks that M_c → ⊕ M_p (p ∈ Ass(M), p ⊆ c) has zero kernel.
InjectivityReport phi_injectivity(const RingContext& ctx, const ModulePresentation& m, const PrimeIdeal& c);

struct MapGerm {
  PrimeIdeal prime;
  Matrix numerator;
  Polynomial denominator;
};

/// Hom(A^a, F) = F^a: glues the column germs as one section of F^a.
ModulePresentation hom_from_free(const ModulePresentation& f, std::size_t a);

/// The unique φ: E → F with φ_p = φ(p) at the listed primes, which must cover
/// Ass(F). Throws PreconditionError when a germ does not respect the
/// relations of E and F; nullopt when no global map exists.
std::optional<Matrix> glue_homomorphism(const RingContext& ctx, const ModulePresentation& e,
                                        const ModulePresentation& f, const std::vector<MapGerm>& germs,
                                        unsigned jobs = 1);

/// φ defines a map E → F.
bool is_well_defined(const Matrix& phi, const ModulePresentation& e, const ModulePresentation& f);

/// φ and ψ induce the same map E → F.
bool same_map(const Matrix& phi, const Matrix& psi, const ModulePresentation& f);

}  // namespace germs
