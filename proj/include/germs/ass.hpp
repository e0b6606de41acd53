#pragma once

#include <string>
#include <vector>

#include "germs/spectrum.hpp"

namespace germs {

/// Finite set of primes, deduplicated and in canonical order.
using AssSet = std::vector<PrimeIdeal>;

AssSet canonical(AssSet s);
std::string to_string(const AssSet& s);
bool contains(const AssSet& s, const PrimeIdeal& p);

/// Ass(E/J) for a monomial submodule J, by splitting each component ideal
/// into irreducible monomial ideals.
AssSet ass_monomial(const RingContext& ctx, const Submodule& j);

/// Ass(M) over a one-variable ring from the elementary divisors.
AssSet ass_univariate(const RingContext& ctx, const ModulePresentation& m);

/// p ∈ Ass(E/J), decided locally: with C the contraction of J at p,
/// p is associated iff (C : p) is strictly larger than C.
bool ass_membership(const PrimeIdeal& p, const Submodule& j);

/// Ass(E/J) by testing every monomial prime with ass_membership; valid for
/// multigraded J, whose associated primes are monomial.
AssSet ass_by_membership(const RingContext& ctx, const Submodule& j);

/// Ass(E/J) with the engine matching the context.
AssSet ass(const RingContext& ctx, const Submodule& j);

}  // namespace germs
