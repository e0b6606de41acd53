#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace germs::finite {

/// Membership vector over the elements of a finite set.
using Subset = std::vector<bool>;

/// A finite commutative ring given by its full tables. Element 0 is zero.
class FiniteRing {
 public:
  /// Z/n.
  static FiniteRing integers_mod(unsigned n);
  /// F_2[x]/(x^k).
  static FiniteRing f2_truncated(unsigned k);
  /// F_2[x, y]/(x, y)^2.
  static FiniteRing f2_square_zero();
  /// f2, f3, z4, z8, z6, f2x_x2, f2xy_m2, f2x_x3.
  static FiniteRing by_name(const std::string& name);
  static std::vector<std::string> suite();

  const std::string& name() const { return name_; }
  unsigned size() const { return n_; }
  unsigned one() const { return one_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * n_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * n_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  const std::string& element_name(unsigned a) const { return names_[a]; }

  const std::vector<unsigned>& units() const { return units_; }
  const std::vector<Subset>& ideals() const { return ideals_; }
  const std::vector<Subset>& primes() const { return primes_; }
  const std::vector<unsigned>& idempotents() const { return idempotents_; }
  /// The primitive idempotent e_p with A_p = e_p A.
  unsigned local_idempotent(std::size_t prime) const { return local_idem_[prime]; }
  /// "(2)", "(x, y)", "(0)".
  std::string ideal_name(const Subset& ideal) const;

  /// Associativity, commutativity, distributivity, identities on the tables.
  bool verify_axioms() const;

 private:
  FiniteRing(std::string name, unsigned n, std::vector<unsigned> add, std::vector<unsigned> mul,
             std::vector<std::string> names);
  void analyze();

  std::string name_;
  unsigned n_ = 0;
  unsigned one_ = 1;
  std::vector<unsigned> add_, mul_, neg_;
  std::vector<std::string> names_;
  std::vector<unsigned> units_;
  std::vector<Subset> ideals_;
  std::vector<Subset> primes_;
  std::vector<unsigned> idempotents_;
  std::vector<unsigned> local_idem_;
};

/// The free module A^rank, elements encoded in base |A|.
class FreeModule {
 public:
  FreeModule(const FiniteRing& ring, unsigned rank, std::size_t bound = 4096);

  const FiniteRing& ring() const { return *ring_; }
  unsigned rank() const { return rank_; }
  std::size_t size() const { return size_; }
  std::size_t add(std::size_t u, std::size_t v) const;
  std::size_t smul(unsigned a, std::size_t u) const;
  std::string element_name(std::size_t u) const;

  /// Smallest submodule containing `seed`.
  Subset span(const Subset& seed) const;
  Subset zero() const;
  Subset full() const { return Subset(size_, true); }

 private:
  const FiniteRing* ring_;
  unsigned rank_;
  std::size_t size_;
};

/// Every submodule, sorted by size then membership. Throws LimitExceeded
/// when |E| exceeds the module bound.
std::vector<Subset> enumerate_submodules(const FreeModule& e);

/// {m : s*m ∈ n for some s ∉ p} straight from the definition.
Subset contract_by_definition(const FreeModule& e, const Subset& n, std::size_t prime);
/// {m : e_p*m ∈ n} through the idempotent splitting.
Subset contract_by_idempotent(const FreeModule& e, const Subset& n, std::size_t prime);

/// ann(m) for m ∈ E/F.
Subset annihilator(const FreeModule& e, const Subset& f, std::size_t m);

/// Primes p = ann(m) for some m ∈ E/F.
std::vector<std::size_t> ass_finite(const FreeModule& e, const Subset& f);

/// p ⊆ q as sets.
bool subset_of(const Subset& a, const Subset& b);

/// Ass_{A_p}(E_p / J(p)) contains p A_p; J(p) is given by its contraction.
bool maximal_is_associated(const FreeModule& e, const Subset& contraction, std::size_t prime);

/// Intersection of the contractions over the finiteness set, E when empty.
Subset reconstruct_finite(const FreeModule& e, const std::vector<Subset>& family);
/// Local ring: the contraction at the maximal ideal.
Subset reconstruct_local_finite(const FreeModule& e, const std::vector<Subset>& family);

struct OracleReport {
  std::string ring;
  unsigned rank = 1;
  std::size_t submodules = 0;
  std::size_t families = 0;
  std::size_t modules = 0;
  std::size_t violations = 0;
  std::vector<std::string> counterexamples;
};

/// Every family of stalks over every prime: consistency and finiteness by
/// definition against existence of F by exhaustive scan, uniqueness,
/// Ass(E/F) = the finiteness set and the intersection formula.
OracleReport oracle_families(const FiniteRing& a, unsigned rank = 1, unsigned jobs = 1);

/// For every F ⊂ E: the localization kernels of E/F over all primes, over
/// the maximal primes and over Ass(E/F) all meet in zero, and the two
/// contraction routes agree.
OracleReport oracle_localization(const FiniteRing& a, unsigned rank = 1, unsigned jobs = 1);

}  // namespace germs::finite
