#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germs/ass.hpp"

namespace germs {

/// How the family is defined at primes without an explicit entry.
struct GenericRule {
  enum class Kind {
    FromSubmodule,        // J(p) = G_p
    FullStalk,            // J(p) = E_p
    MaximalIdealPattern,  // J(m) = m E_m at maximal m, E_p elsewhere
    Unsupported,          // a named pattern this tool cannot evaluate
  };
  Kind kind = Kind::FullStalk;
  Submodule submodule;
  std::string name;

  static GenericRule from_submodule(Submodule g);
  static GenericRule full();
  static GenericRule maximal_ideal_pattern();
  static GenericRule unsupported(std::string name);

  std::string describe() const;
};

/// Finite presentation of a family of stalks (J(p) ⊂ E_p) with E = A^rank.
struct GermFamily {
  RingContext context;
  std::size_t rank = 0;
  std::vector<LocalizedSubmodule> entries;
  GenericRule generic;

  GermFamily() = default;
  GermFamily(RingContext ctx, std::size_t rank, std::vector<LocalizedSubmodule> entries, GenericRule generic);

  /// Explicit entry at p, if any.
  const LocalizedSubmodule* explicit_at(const PrimeIdeal& p) const;
};

/// J(p): the explicit entry or the generic rule evaluated at p.
LocalizedSubmodule stalk_at(const GermFamily& fam, const PrimeIdeal& p);

struct Violation {
  std::string smaller;
  std::string larger;
  /// Contraction of the prescribed stalk at the smaller prime.
  std::string prescribed;
  /// Contraction of the larger prime's stalk, localized down.
  std::string localized;
};

struct ConsistencyReport {
  bool pass = true;
  std::vector<Violation> violations;
  /// Number of prime pairs compared.
  std::size_t pairs_checked = 0;
};

/// Compares J(p) with J(q)_p for every p ⊊ q where at least one side is
/// explicit. Primes the engine cannot list individually (non-monomial primes
/// of a polynomial ring, unlisted maximal ideals of k[t]) are represented by
/// one generic node per class, which makes the check exhaustive.
ConsistencyReport check_consistency(const GermFamily& fam, unsigned jobs = 1);

struct FinitenessReport {
  enum class Verdict { Finite, Infinite, Undecided };
  Verdict verdict = Verdict::Finite;
  AssSet primes;
  std::string witness;
};

std::string verdict_name(FinitenessReport::Verdict v);

/// The set of primes p with pA_p ∈ Ass(E_p / J(p)). Throws PreconditionError
/// when the family is inconsistent.
FinitenessReport check_finiteness(const GermFamily& fam, unsigned jobs = 1);

}  // namespace germs
