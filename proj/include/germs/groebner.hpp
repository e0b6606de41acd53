#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germs/module_element.hpp"

namespace germs {

struct GroebnerCache;

/// Submodule of the free module A^r given by generators. The reduced
/// Groebner basis (ring order, position over term) is computed at most once
/// and shared between copies.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, std::size_t rank, std::vector<ModuleElement> generators);

  static Submodule zero(const RingPtr& ring, std::size_t rank);
  static Submodule full(const RingPtr& ring, std::size_t rank);
  /// Ideal of A viewed as a submodule of A^1.
  static Submodule ideal(const RingPtr& ring, const std::vector<Polynomial>& generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }

  /// Reduced Groebner basis, sorted by descending leading term.
  const std::vector<ModuleElement>& basis() const;

  bool is_zero() const;
  bool is_full() const;
  /// Every reduced basis element is a single term.
  bool is_monomial() const;

  bool contains(const ModuleElement& w) const;
  bool contains(const Submodule& other) const;
  /// Remainder of w against the reduced basis (canonical representative).
  ModuleElement normal_form(const ModuleElement& w) const;

  /// "(g1, g2, ...)" over the reduced basis; "(0)" for zero.
  std::string to_string() const;

  friend bool operator==(const Submodule& a, const Submodule& b);

 private:
  friend std::optional<std::vector<Polynomial>> lift(const ModuleElement&, const Submodule&);

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleElement> gens_;
  std::shared_ptr<GroebnerCache> cache_;
};

/// Finitely presented module A^g / relations.
struct ModulePresentation {
  RingPtr ring;
  std::size_t generators = 0;
  Submodule relations;

  ModulePresentation() = default;
  ModulePresentation(RingPtr r, std::size_t g, std::vector<ModuleElement> rels);
  ModulePresentation(RingPtr r, std::size_t g, Submodule rels);

  /// Free module A^g.
  static ModulePresentation free(const RingPtr& ring, std::size_t g);
  /// The submodule S ⊂ A^r as an abstract module (generators plus syzygies).
  static ModulePresentation of_submodule(const Submodule& s);
  /// The quotient A^r / S.
  static ModulePresentation quotient(const Submodule& s);

  std::string to_string() const;
};

/// Presentation of Hom(E, F) together with the homomorphism each generator
/// stands for (a matrix from E's generators to F's generators).
struct HomModule {
  ModulePresentation presentation;
  std::vector<Matrix> generator_maps;
  /// All well-defined matrices, as a submodule of A^(gF*gE) (column-major).
  Submodule kernel;
  /// Matrices inducing the zero map: columns in F's relations.
  Submodule zero_maps;
  std::size_t source_generators = 0;
  std::size_t target_generators = 0;

  /// Combination sum c_j * generator_maps[j].
  Matrix evaluate(const std::vector<Polynomial>& coefficients) const;
};

/// Reduced Groebner basis of the span of `generators` in A^rank.
std::vector<ModuleElement> groebner_basis(const RingPtr& ring, std::size_t rank,
                                          const std::vector<ModuleElement>& generators,
                                          Position position = Position::OverTerm);

/// S with its reduced basis computed.
Submodule groebner(const Submodule& s);

/// Remainder of w modulo `basis` by the multivariate division algorithm.
ModuleElement normal_form(const ModuleElement& w, const std::vector<ModuleElement>& basis,
                          Position position = Position::OverTerm);

/// True when every S-vector of `basis` reduces to zero modulo it.
bool is_groebner_basis(const std::vector<ModuleElement>& basis,
                       Position position = Position::OverTerm);

bool member(const ModuleElement& w, const Submodule& s);

/// Coefficients c with w = sum c_i * s.generators()[i], or nullopt.
std::optional<std::vector<Polynomial>> lift(const ModuleElement& w, const Submodule& s);

Submodule sum(const Submodule& s, const Submodule& t);
Submodule scale(const Submodule& s, const Polynomial& f);

/// S ∩ T by elimination: t*S + (1-t)*T with t eliminated.
Submodule intersect(const Submodule& s, const Submodule& t);
/// S ∩ T through the syzygies of (S | T); an independent second route.
Submodule intersect_via_syzygies(const Submodule& s, const Submodule& t);

/// (S : f) = {w : f*w ∈ S}.
Submodule quotient(const Submodule& s, const Polynomial& f);
/// (S : I) for an ideal given by generators.
Submodule quotient(const Submodule& s, const std::vector<Polynomial>& ideal);

struct Saturation {
  Submodule module;
  /// Smallest N with (S : f^N) = (S : f^(N+1)).
  unsigned exponent = 0;
};

/// (S : f^∞) by iterated quotients.
Saturation saturate(const Submodule& s, const Polynomial& f);

/// Relation module of the generator list.
ModulePresentation syzygies(const RingPtr& ring, std::size_t rank,
                            const std::vector<ModuleElement>& generators);
ModulePresentation syzygies(const Submodule& s);

/// {z ∈ A^cols : a*z ∈ target}.
Submodule preimage(const Matrix& a, const Submodule& target);

/// Image of the submodule under the matrix.
Submodule image(const Matrix& a, const Submodule& s);

HomModule hom_module(const ModulePresentation& e, const ModulePresentation& f);

/// Divides every component by f; nullopt unless exact.
std::optional<ModuleElement> divide_exact(const ModuleElement& w, const Polynomial& f);

}  // namespace germs
