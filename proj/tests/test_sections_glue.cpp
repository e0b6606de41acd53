#include "doctest.h"

#include "germs/error.hpp"
#include "germs/parse.hpp"
#include "germs/sections_glue.hpp"
#include "random_modules.hpp"

using namespace germs;

namespace {

struct Univ {
  RingPtr r = make_ring({"t"});
  RingContext ctx = RingContext::univariate(r);
  Polynomial P(const char* s) const { return parse_polynomial(r, s); }
  ModuleElement E(const char* s) const { return ModuleElement(P(s)); }
  PrimeIdeal prime(const char* s) const { return PrimeIdeal::univariate(ctx, UPoly::from_polynomial(P(s))); }
  ModulePresentation cyclic(const char* rel) const { return ModulePresentation(r, 1, {E(rel)}); }
};

struct Mono {
  RingPtr r = make_ring({"x", "y"});
  RingContext ctx = RingContext::monomial(r);
  Polynomial P(const char* s) const { return parse_polynomial(r, s); }
  ModuleElement E(const char* s) const { return ModuleElement(P(s)); }
  PrimeIdeal prime(std::vector<std::string> vars) const { return PrimeIdeal::monomial(ctx, vars); }
};

}  // namespace

TEST_CASE_FIXTURE(Univ, "glue over k[t]/(t^2)") {
  const auto m = cyclic("t^2");
  auto res = glue_section({ctx, m, {{prime("t"), E("1+t"), P("1")}}});
  REQUIRE(res.exists);
  CHECK(res.section == E("t+1"));
  res = glue_section({ctx, m, {{prime("t"), E("1"), P("1+t")}}});
  REQUIRE(res.exists);
  CHECK(res.section == E("1-t"));
  res = glue_section({ctx, m, {{prime("t"), E("0"), P("1")}}});
  REQUIRE(res.exists);
  CHECK(res.section.is_zero());
  REQUIRE(res.opens.size() == 1);
  CHECK(res.opens[0].contains(prime("t")));
  CHECK(res.opens[0].to_string() == "X");
}

TEST_CASE_FIXTURE(Univ, "germs that do not come from M") {
  const auto m = ModulePresentation::free(r, 1);
  const auto res = glue_section({ctx, m, {{PrimeIdeal::zero(ctx), E("1"), P("t")}}});
  CHECK_FALSE(res.exists);
  CHECK_FALSE(res.reason.empty());
  CHECK_THROWS_AS(glue_section({ctx, m, {{PrimeIdeal::zero(ctx), E("1"), P("1")}, {prime("t"), E("t"), P("1")}}}),
                  PreconditionError);
  CHECK_THROWS_AS(glue_section({ctx, m, {}}), PreconditionError);
  CHECK_THROWS_AS(glue_section({ctx, m, {{prime("t"), E("1"), P("t^2")}}}), PreconditionError);
}

TEST_CASE_FIXTURE(Univ, "open sets of the gluing log") {
  // Ass(M) = {(t), (t - 1)} for M = k[t]/(t^2 (t - 1)).
  const auto m = cyclic("t^2*(t-1)");
  const auto res = glue_section({ctx, m, {{prime("t"), E("1"), P("t+1")}, {prime("t-1"), E("2"), P("1")}}});
  REQUIRE(res.exists);
  for (const auto& u : res.opens) {
    CHECK(u.contains(u.base));
    for (const auto& rr : u.removed) CHECK_FALSE(u.contains(rr));
  }
  CHECK(res.opens[0].to_string() == "X - Z(t + 1) - Z(t - 1)");
  CHECK(germ_matches(m, {prime("t"), E("1"), P("t+1")}, res.section));
  CHECK(germ_matches(m, {prime("t-1"), E("2"), P("1")}, res.section));
}

TEST_CASE_FIXTURE(Mono, "glue over Q[x,y]") {
  const auto free = ModulePresentation::free(r, 1);
  auto res = glue_section({ctx, free, {{PrimeIdeal::zero(ctx), E("x+y"), P("1")}}});
  REQUIRE(res.exists);
  CHECK(res.section == E("x+y"));
  const ModulePresentation m(r, 1, {E("x^2"), E("x*y")});
  res = glue_section({ctx, m, {{prime({"x"}), E("x+y"), P("y")}, {prime({"x", "y"}), E("x+1"), P("1")}}});
  REQUIRE(res.exists);
  CHECK(res.section == E("x+1"));
}

TEST_CASE("phi injectivity") {
  Univ u;
  CHECK(phi_injectivity(u.ctx, u.cyclic("t^2"), u.prime("t")).injective);
  Mono m;
  const ModulePresentation q(m.r, 1, {m.E("x^2"), m.E("x*y")});
  const auto rep = phi_injectivity(m.ctx, q, m.prime({"x", "y"}));
  CHECK(rep.injective);
  CHECK(to_string(rep.primes) == "{(x), (x, y)}");
  CHECK(phi_injectivity(m.ctx, ModulePresentation::free(m.r, 2), m.prime({"y"})).injective);
}

TEST_CASE_FIXTURE(Mono, "glue homomorphisms") {
  const auto a = ModulePresentation::free(r, 1);
  auto one = [&](const char* s) {
    Matrix mm(r, 1, 1);
    mm(0, 0) = P(s);
    return mm;
  };
  auto phi = glue_homomorphism(ctx, a, a, {{PrimeIdeal::zero(ctx), one("x^2+y"), P("1")}});
  REQUIRE(phi);
  CHECK(*phi == one("x^2+y"));
  const ModulePresentation ax(r, 1, {E("x")});
  phi = glue_homomorphism(ctx, ax, ax, {{prime({"x"}), one("y"), P("1")}, {prime({"x", "y"}), one("y+x"), P("1")}});
  REQUIRE(phi);
  CHECK(same_map(*phi, one("y"), ax));
  phi = glue_homomorphism(ctx, ax, ax, {{prime({"x"}), one("0"), P("1")}});
  REQUIRE(phi);
  CHECK(phi->is_zero());
  // Multiplication by 1 from A/(x) to A is not a homomorphism.
  CHECK_THROWS_AS(glue_homomorphism(ctx, ax, a, {{PrimeIdeal::zero(ctx), one("1"), P("1")}}), PreconditionError);
  // Hom(A/(x), A/(xy)) is generated by y.
  const ModulePresentation axy(r, 1, {E("x*y")});
  phi = glue_homomorphism(ctx, ax, axy,
                          {{prime({"x"}), one("y"), P("1")}, {prime({"y"}), one("y"), P("1")}});
  REQUIRE(phi);
  CHECK(same_map(*phi, one("y"), axy));
  CHECK(is_well_defined(*phi, ax, axy));
}

namespace {

// Random element with small support and degree.
ModuleElement random_element(const RingPtr& r, testgen::Rng& g, std::size_t rank) {
  ModuleElement v(r, rank);
  for (std::size_t c = 0; c < rank; ++c)
    for (unsigned k = 1 + g(3); k > 0; --k) {
      const long coeff = static_cast<long>(g(4)) - 2;
      v[c] = v[c] + Polynomial::term(r, testgen::monomial(r->nvars(), g, 2), Scalar(r->field(), coeff ? coeff : 3));
    }
  return v;
}

// Element outside p: product of a variable outside p (if any) and 1 + (a variable in p).
Polynomial unit_at(const PrimeIdeal& p, testgen::Rng& g) {
  const RingPtr& r = p.context().ring;
  Polynomial s = Polynomial::constant(r, 1 + static_cast<long>(g(3)));
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    const Polynomial x = Polynomial::variable(r, i);
    if (p.contains(x)) {
      if (g(2)) s = s * (x + Polynomial::constant(r, 1));
    } else if (g(2)) {
      s = s * x;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("property: germs of a random element glue back to it") {
  Mono mo;
  testgen::Rng g{5};
  for (int it = 0; it < 15; ++it) {
    const std::size_t rank = 1 + g(2);
    const Submodule rels = testgen::monomial_submodule(mo.r, g, rank, 4, 3);
    const ModulePresentation m(mo.r, rank, rels);
    const ModuleElement v = random_element(mo.r, g, rank);
    GermSectionFamily fam{mo.ctx, m, {}};
    AssSet primes = ass(mo.ctx, rels);
    if (!contains(primes, PrimeIdeal::zero(mo.ctx))) primes.insert(primes.begin(), PrimeIdeal::zero(mo.ctx));
    for (const auto& p : primes) {
      const Polynomial s = unit_at(p, g);
      fam.germs.push_back({p, v.scaled(s), s});
    }
    const auto res = glue_section(fam);
    REQUIRE(res.exists);
    CHECK(res.section == rels.normal_form(v));
    for (const auto& u : res.opens) CHECK(u.contains(u.base));
    for (const auto& p : all_monomial_primes(mo.ctx)) CHECK(phi_injectivity(mo.ctx, m, p).injective);
  }
}

TEST_CASE("property: univariate gluing round trip") {
  Univ un;
  testgen::Rng g{77};
  for (int it = 0; it < 15; ++it) {
    const std::size_t rank = 1 + g(2);
    const Submodule rels = testgen::univariate_submodule(un.r, g, rank);
    const ModulePresentation m(un.r, rank, rels);
    const ModuleElement v = random_element(un.r, g, rank);
    GermSectionFamily fam{un.ctx, m, {}};
    AssSet primes = ass(un.ctx, rels);
    if (!contains(primes, PrimeIdeal::zero(un.ctx))) primes.insert(primes.begin(), PrimeIdeal::zero(un.ctx));
    for (const auto& p : primes) fam.germs.push_back({p, v, un.P("1")});
    const auto res = glue_section(fam);
    REQUIRE(res.exists);
    CHECK(res.section == rels.normal_form(v));
    GermSectionFamily zero{un.ctx, m, {}};
    for (const auto& p : primes) zero.germs.push_back({p, ModuleElement(un.r, rank), un.P("1")});
    CHECK(glue_section(zero).section.is_zero());
  }
}
