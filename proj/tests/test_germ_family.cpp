#include "doctest.h"

#include "germs/error.hpp"
#include "germs/germ_family.hpp"
#include "germs/parse.hpp"
#include "random_modules.hpp"

using namespace germs;

namespace {

struct Fixture {
  RingPtr r = make_ring({"x", "y"});
  RingContext ctx = RingContext::monomial(r);
  Polynomial P(const char* s) const { return parse_polynomial(r, s); }
  Submodule I(std::initializer_list<const char*> gens) const {
    std::vector<Polynomial> ps;
    for (auto g : gens) ps.push_back(P(g));
    return Submodule::ideal(r, ps);
  }
  PrimeIdeal prime(std::vector<std::string> vars) const { return PrimeIdeal::monomial(ctx, vars); }
  LocalizedSubmodule stalk(const PrimeIdeal& p, const Submodule& s) const { return {p, s.rank(), s.generators()}; }
};

bool has_pair(const ConsistencyReport& rep, const std::string& a, const std::string& b) {
  for (const auto& v : rep.violations)
    if (v.smaller == a && v.larger == b) return true;
  return false;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "localizations of one submodule are consistent") {
  const Submodule f = I({"x^2", "x*y"});
  std::vector<LocalizedSubmodule> entries;
  for (const auto& p : all_monomial_primes(ctx)) entries.push_back(localize(f, p));
  const GermFamily fam(ctx, 1, entries, GenericRule::from_submodule(f));
  const auto rep = check_consistency(fam);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked > 0);
  const auto fin = check_finiteness(fam);
  CHECK(fin.verdict == FinitenessReport::Verdict::Finite);
  CHECK(to_string(fin.primes) == "{(x), (x, y)}");
}

TEST_CASE_FIXTURE(Fixture, "inconsistent explicit stalks are reported") {
  const GermFamily fam(ctx, 1, {stalk(prime({"x"}), I({"x^2"})), stalk(prime({"x", "y"}), I({"x"}))},
                       GenericRule::full());
  const auto rep = check_consistency(fam);
  CHECK_FALSE(rep.pass);
  CHECK(has_pair(rep, "(x)", "(x, y)"));
  CHECK_THROWS_AS(check_finiteness(fam), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "generic rules") {
  const GermFamily empty(ctx, 2, {}, GenericRule::full());
  CHECK(check_consistency(empty).pass);
  const auto fin = check_finiteness(empty);
  CHECK(fin.verdict == FinitenessReport::Verdict::Finite);
  CHECK(fin.primes.empty());
  const GermFamily from(ctx, 1, {}, GenericRule::from_submodule(I({"x^2", "x*y"})));
  CHECK(to_string(check_finiteness(from).primes) == "{(x), (x, y)}");
  CHECK(stalk_at(from, prime({"x"})).span().to_string() == "(x)");
  const GermFamily odd(ctx, 1, {}, GenericRule::unsupported("every other prime"));
  CHECK(check_finiteness(odd).verdict == FinitenessReport::Verdict::Undecided);
  CHECK_THROWS_AS(stalk_at(odd, prime({"x"})), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "a stalk that disagrees with a non-monomial generic prime") {
  // J((x)) = (x^2) while every unlisted prime gets the full stalk: the prime
  // (x, y - 1) contains (x) and carries E, so the family is inconsistent.
  const GermFamily fam(ctx, 1, {stalk(prime({"x"}), I({"x^2"}))}, GenericRule::full());
  const auto rep = check_consistency(fam);
  CHECK_FALSE(rep.pass);
  CHECK(has_pair(rep, "(x)", "generic non-monomial prime over (x)"));
  CHECK(has_pair(rep, "(x)", "(x, y)"));
}

TEST_CASE_FIXTURE(Fixture, "maximal-ideal pattern on the monomial engine") {
  const GermFamily global(ctx, 1, {}, GenericRule::maximal_ideal_pattern());
  CHECK(check_consistency(global).pass);
  CHECK(check_finiteness(global).verdict == FinitenessReport::Verdict::Infinite);
  CHECK(stalk_at(global, prime({"x", "y"})).span().to_string() == "(x, y)");
  CHECK(stalk_at(global, prime({"x"})).span().is_full());
  // Over the local ring the pattern has one maximal prime.
  const RingContext local = RingContext::monomial(r, true);
  const GermFamily loc(local, 1, {}, GenericRule::maximal_ideal_pattern());
  const auto fin = check_finiteness(loc);
  CHECK(fin.verdict == FinitenessReport::Verdict::Finite);
  CHECK(to_string(fin.primes) == "{(x, y)}");
}

TEST_CASE("maximal-ideal pattern over k[t]") {
  auto r = make_ring({"t"});
  auto ctx = RingContext::univariate(r);
  auto P = [&](const char* s) { return parse_polynomial(r, s); };
  const GermFamily fam(ctx, 1, {}, GenericRule::maximal_ideal_pattern());
  const auto a = PrimeIdeal::univariate(ctx, UPoly::from_polynomial(P("t-3")));
  CHECK(stalk_at(fam, a).span().to_string() == "(t - 3)");
  CHECK(stalk_at(fam, PrimeIdeal::zero(ctx)).span().is_full());
  CHECK(check_consistency(fam).pass);
  const auto fin = check_finiteness(fam);
  CHECK(fin.verdict == FinitenessReport::Verdict::Infinite);
  CHECK_FALSE(fin.witness.empty());
  // The pattern is rejected for every rank n >= 1.
  for (std::size_t n = 1; n <= 3; ++n) {
    const GermFamily f(ctx, n, {}, GenericRule::maximal_ideal_pattern());
    CHECK(check_finiteness(f).verdict == FinitenessReport::Verdict::Infinite);
  }
}

TEST_CASE("univariate consistency") {
  auto r = make_ring({"t"});
  auto ctx = RingContext::univariate(r);
  auto P = [&](const char* s) { return parse_polynomial(r, s); };
  auto prime = [&](const char* s) { return PrimeIdeal::univariate(ctx, UPoly::from_polynomial(P(s))); };
  const Submodule g = Submodule::ideal(r, {P("t^2*(t-1)")});
  const GermFamily ok(ctx, 1, {localize(g, prime("t")), localize(g, PrimeIdeal::zero(ctx))},
                      GenericRule::from_submodule(g));
  CHECK(check_consistency(ok).pass);
  CHECK(to_string(check_finiteness(ok).primes) == "{(t - 1), (t)}");
  const GermFamily bad(ctx, 1, {LocalizedSubmodule{PrimeIdeal::zero(ctx), 1, {}}}, GenericRule::full());
  const auto rep = check_consistency(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.violations.front().larger == "generic maximal prime");
  // A torsion stalk at a maximal prime with full generic stalks is consistent.
  const GermFamily tor(ctx, 1, {LocalizedSubmodule{prime("t"), 1, {ModuleElement(P("t^3"))}}}, GenericRule::full());
  CHECK(check_consistency(tor).pass);
  CHECK(to_string(check_finiteness(tor).primes) == "{(t)}");
}

TEST_CASE("property: families from submodules pass and report Ass(E/F)") {
  auto r = make_ring({"x", "y", "z"});
  auto ctx = RingContext::monomial(r);
  testgen::Rng g{17};
  const auto primes = all_monomial_primes(ctx);
  for (int it = 0; it < 25; ++it) {
    const Submodule f = testgen::monomial_submodule(r, g, 1 + g(2), 3, 4);
    std::vector<LocalizedSubmodule> entries;
    for (const auto& p : primes)
      if (g(2)) entries.push_back(localize(f, p));
    const GermFamily fam(ctx, f.rank(), entries, GenericRule::from_submodule(f));
    CHECK(check_consistency(fam, 2).pass);
    const auto fin = check_finiteness(fam, 2);
    CHECK(fin.primes == ass_monomial(ctx, f));

    // Perturb one non-maximal explicit stalk: the family must be rejected.
    for (auto& e : entries) {
      if (e.prime.is_maximal()) continue;
      const Submodule c = contract(e);
      // Multiply by a variable inside the prime; (0) shrinks to zero.
      Submodule smaller = Submodule::zero(r, f.rank());
      for (std::size_t k = 0; k < 3; ++k)
        if (e.prime.mask() >> k & 1) smaller = scale(c, Polynomial::variable(r, k));
      if (smaller == c) continue;
      auto bad_entries = entries;
      for (auto& b : bad_entries)
        if (b.prime == e.prime) b = LocalizedSubmodule{e.prime, f.rank(), smaller.generators()};
      const GermFamily bad(ctx, f.rank(), bad_entries, GenericRule::from_submodule(f));
      CHECK_FALSE(check_consistency(bad).pass);
      break;
    }
  }
}
