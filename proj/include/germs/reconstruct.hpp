#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germs/germ_family.hpp"

namespace germs {

struct VerificationRow {
  PrimeIdeal prime;
  /// Contraction of J(q).
  Submodule prescribed;
  /// Contraction of F at q.
  Submodule contracted;
  /// Contraction at q of the saturation of F by the separating element.
  Submodule via_separator;
  Polynomial separator;
  unsigned exponent = 0;
  bool equal = false;
};

struct ReconstructionResult {
  Submodule F;
  AssSet primes;
  /// i_p^{-1} J(p) for p in `primes`, same order.
  std::vector<Submodule> contractions;
  std::vector<VerificationRow> table;
  AssSet ass_of_quotient;
  bool ass_matches = false;
  bool success = false;
  /// Set when a check failed; names the offending prime.
  std::string alarm;
};

/// F = intersection of i_p^{-1} J(p) over the primes of the finiteness set,
/// verified at every explicit prime, every prime of that set and `verify_at`
/// (plus all monomial primes on small monomial contexts).
ReconstructionResult reconstruct(const GermFamily& fam, const std::vector<PrimeIdeal>& verify_at = {},
                                 unsigned jobs = 1);

/// Local context: F is the prescribed stalk at the maximal ideal.
Submodule reconstruct_local(const GermFamily& fam);

/// (primes contained in q, the rest).
std::pair<AssSet, AssSet> partition(const PrimeIdeal& q, const AssSet& primes);

/// Product of the canonically first generator outside q of each prime in r,
/// repeated factors dropped; 1 for empty r.
Polynomial separating_element(const PrimeIdeal& q, const AssSet& r);

/// (F : a^∞), whose localization at q is F_q.
Saturation stalk_of_F_via_separator(const Submodule& f, const PrimeIdeal& q, const Polynomial& a);

}  // namespace germs
