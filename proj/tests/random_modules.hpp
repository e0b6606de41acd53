#pragma once

#include <cstdint>

#include "germs/groebner.hpp"

// Hand-rolled generators for property tests.
namespace testgen {

struct Rng {
  std::uint64_t state;
  unsigned operator()(unsigned n) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned>(state >> 33) % n;
  }
};

inline germs::Monomial monomial(std::size_t nvars, Rng& g, unsigned max_degree) {
  germs::Monomial m(nvars);
  unsigned budget = 1 + g(max_degree);
  for (unsigned k = 0; k < budget; ++k) m[g(static_cast<unsigned>(nvars))] += 1;
  return m;
}

// Monomial submodule of A^rank with up to `max_gens` generators of degree ≤ max_degree.
inline germs::Submodule monomial_submodule(const germs::RingPtr& r, Rng& g, std::size_t rank,
                                           unsigned max_gens, unsigned max_degree) {
  std::vector<germs::ModuleElement> gens;
  const unsigned k = g(max_gens + 1);
  for (unsigned i = 0; i < k; ++i) {
    germs::ModuleElement e(r, rank);
    e[g(static_cast<unsigned>(rank))] = germs::Polynomial::term(r, monomial(r->nvars(), g, max_degree),
                                                                germs::Scalar::one(r->field()));
    gens.push_back(e);
  }
  return germs::Submodule(r, rank, gens);
}

// Submodule of k[t]^rank generated by products of small linear and quadratic factors.
inline germs::Submodule univariate_submodule(const germs::RingPtr& r, Rng& g, std::size_t rank) {
  using germs::Polynomial;
  const Polynomial t = Polynomial::variable(r, 0);
  auto factor = [&]() {
    switch (g(4)) {
      case 0: return t;
      case 1: return t - Polynomial::constant(r, 1);
      case 2: return t * t + Polynomial::constant(r, 1);
      default: return t + Polynomial::constant(r, 2);
    }
  };
  std::vector<germs::ModuleElement> gens;
  const unsigned k = g(rank + 2);
  for (unsigned i = 0; i < k; ++i) {
    germs::ModuleElement e(r, rank);
    for (std::size_t c = 0; c < rank; ++c) {
      if (g(3) == 0) continue;
      Polynomial p = Polynomial::constant(r, 1 + static_cast<long>(g(3)));
      const unsigned d = g(3);
      for (unsigned j = 0; j < d; ++j) p = p * factor();
      e[c] = p;
    }
    gens.push_back(e);
  }
  return germs::Submodule(r, rank, gens);
}

}  // namespace testgen
