#include "doctest.h"

#include "germs/error.hpp"
#include "germs/parse.hpp"
#include "germs/reconstruct.hpp"
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
  AssSet worked() const { return {prime({"x"}), prime({"x", "y"})}; }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "partition") {
  auto [l, rr] = partition(prime({"x"}), worked());
  CHECK(to_string(l) == "{(x)}");
  CHECK(to_string(rr) == "{(x, y)}");
  std::tie(l, rr) = partition(prime({"x", "y"}), worked());
  CHECK(l == worked());
  CHECK(rr.empty());
  std::tie(l, rr) = partition(prime({"y"}), worked());
  CHECK(l.empty());
  CHECK(rr == worked());
}

TEST_CASE_FIXTURE(Fixture, "separating elements") {
  CHECK(separating_element(prime({"x"}), {prime({"x", "y"})}) == P("y"));
  CHECK(separating_element(prime({"x"}), {}) == P("1"));
  CHECK(separating_element(prime({"y"}), worked()) == P("x"));
  CHECK_THROWS_AS(separating_element(prime({"x", "y"}), {prime({"x"})}), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "stalks through the separator") {
  const Submodule f = I({"x^2", "x*y"});
  auto s = stalk_of_F_via_separator(f, prime({"x"}), P("y"));
  CHECK(s.module == I({"x"}));
  CHECK(s.exponent == 1);
  s = stalk_of_F_via_separator(f, prime({"x", "y"}), P("1"));
  CHECK(s.module == f);
  CHECK(s.exponent == 0);
  // (x^2, xy) : x = (x, y) and (x, y) : x = (1).
  s = stalk_of_F_via_separator(f, prime({"y"}), P("x"));
  CHECK(s.module.is_full());
  CHECK(s.exponent == 2);
  CHECK(contract(s.module, prime({"y"})).is_full());
}

TEST_CASE_FIXTURE(Fixture, "reconstruct the (x^2, xy) family") {
  const Submodule f0 = I({"x^2", "x*y"});
  std::vector<LocalizedSubmodule> entries{localize(f0, prime({"x"})), localize(f0, prime({"x", "y"}))};
  const GermFamily fam(ctx, 1, entries, GenericRule::from_submodule(f0));
  const auto res = reconstruct(fam);
  CHECK(res.success);
  CHECK(res.F == f0);
  CHECK(to_string(res.primes) == "{(x), (x, y)}");
  REQUIRE(res.contractions.size() == 2);
  CHECK(res.contractions[0] == I({"x"}));
  CHECK(res.contractions[1] == f0);
  CHECK(res.table.size() == 4);
  for (const auto& row : res.table) CHECK(row.equal);
}

TEST_CASE_FIXTURE(Fixture, "trivial families") {
  const auto full = reconstruct(GermFamily(ctx, 2, {}, GenericRule::full()));
  CHECK(full.success);
  CHECK(full.F.is_full());
  CHECK(full.primes.empty());
  const auto zero = reconstruct(GermFamily(ctx, 2, {}, GenericRule::from_submodule(Submodule::zero(r, 2))));
  CHECK(zero.success);
  CHECK(zero.F.is_zero());
  CHECK(to_string(zero.primes) == "{(0)}");
}

TEST_CASE_FIXTURE(Fixture, "inconsistent or infinite families are refused") {
  const GermFamily bad(ctx, 1, {LocalizedSubmodule{prime({"x"}), 1, {ModuleElement(P("x^2"))}}}, GenericRule::full());
  CHECK_THROWS_AS(reconstruct(bad), PreconditionError);
  const GermFamily inf(ctx, 1, {}, GenericRule::maximal_ideal_pattern());
  CHECK_THROWS_AS(reconstruct(inf), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "local case") {
  const RingContext local = RingContext::monomial(r, true);
  const Submodule f0 = I({"x^2", "x*y"});
  const GermFamily fam(local, 1, {localize(f0, PrimeIdeal::monomial(local, 3))}, GenericRule::from_submodule(f0));
  CHECK(reconstruct_local(fam) == f0);
  CHECK(reconstruct(fam).F == f0);
  CHECK_THROWS_AS(reconstruct_local(GermFamily(ctx, 1, {}, GenericRule::full())), PreconditionError);
  const GermFamily pat(local, 1, {}, GenericRule::maximal_ideal_pattern());
  CHECK(reconstruct_local(pat) == I({"x", "y"}));
}

TEST_CASE("truncated maximal-ideal pattern over k[t]") {
  auto r = make_ring({"t"});
  auto ctx = RingContext::univariate(r);
  auto P = [&](const char* s) { return parse_polynomial(r, s); };
  std::vector<LocalizedSubmodule> entries;
  for (const char* a : {"t", "t-1", "t^2+1"}) {
    const auto p = PrimeIdeal::univariate(ctx, UPoly::from_polynomial(P(a)));
    entries.push_back({p, 1, {ModuleElement(P(a))}});
  }
  const auto res = reconstruct(GermFamily(ctx, 1, entries, GenericRule::full()));
  CHECK(res.success);
  CHECK(res.F == Submodule::ideal(r, {P("t*(t-1)*(t^2+1)")}));
  CHECK(res.primes.size() == 3);
}

TEST_CASE("property: round trip through FromSubmodule") {
  auto r = make_ring({"x", "y", "z"});
  auto ctx = RingContext::monomial(r);
  testgen::Rng g{2024};
  for (int it = 0; it < 30; ++it) {
    const Submodule f = testgen::monomial_submodule(r, g, 1 + g(2), 5, 4);
    const GermFamily fam(ctx, f.rank(), {}, GenericRule::from_submodule(f));
    const auto res = reconstruct(fam, {}, 2);
    CHECK(res.success);
    CHECK(res.F == f);
    CHECK(res.primes == ass_monomial(ctx, f));
    // Separator soundness at every monomial prime.
    for (const auto& row : res.table) {
      const auto sat = stalk_of_F_via_separator(f, row.prime, row.separator);
      CHECK(contract(sat.module, row.prime) == contract(f, row.prime));
    }
  }
}

TEST_CASE("property: univariate round trip") {
  auto r = make_ring({"t"});
  auto ctx = RingContext::univariate(r);
  testgen::Rng g{99};
  for (int it = 0; it < 20; ++it) {
    const Submodule f = testgen::univariate_submodule(r, g, 1 + g(2));
    const auto res = reconstruct(GermFamily(ctx, f.rank(), {}, GenericRule::from_submodule(f)));
    CHECK(res.success);
    CHECK(res.F == f);
  }
}
