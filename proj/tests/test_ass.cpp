#include "doctest.h"

#include <set>

#include "germs/ass.hpp"
#include "germs/error.hpp"
#include "germs/parse.hpp"
#include "random_modules.hpp"

using namespace germs;

namespace {

// Oracle: Ass(A/I) = {(I : m) : m monomial, (I : m) prime}; monomials with
// exponents bounded by the generators' maxima suffice.
std::set<std::uint64_t> brute_force_ass(const std::vector<Monomial>& gens, std::size_t n) {
  std::set<std::uint64_t> out;
  if (gens.empty()) {
    out.insert(0);
    return out;
  }
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  Monomial m(n);
  for (;;) {
    bool inside = false;
    for (const auto& g : gens) inside = inside || g.divides(m);
    if (!inside) {
      // (I : m) generated by g / gcd(g, m); prime iff its minimal generators are variables.
      std::vector<Monomial> q;
      for (const auto& g : gens) q.push_back(g / gcd(g, m));
      std::vector<Monomial> minimal;
      for (std::size_t i = 0; i < q.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < q.size() && !red; ++j)
          red = (q[j].divides(q[i]) && !(q[j] == q[i])) || (q[j] == q[i] && j < i);
        if (!red) minimal.push_back(q[i]);
      }
      bool prime = true;
      std::uint64_t mask = 0;
      for (const auto& x : minimal) {
        if (x.degree() != 1) prime = false;
        for (std::size_t i = 0; i < n; ++i)
          if (x[i]) mask |= std::uint64_t{1} << i;
      }
      if (prime) out.insert(mask);
    }
    std::size_t i = 0;
    while (i < n && m[i] == bound[i]) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  return out;
}

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
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "monomial associated primes") {
  CHECK(to_string(ass_monomial(ctx, I({"x^2", "x*y"}))) == "{(x), (x, y)}");
  CHECK(to_string(ass_monomial(ctx, Submodule::zero(r, 1))) == "{(0)}");
  CHECK(to_string(ass_monomial(ctx, I({"x"}))) == "{(x)}");
  CHECK(ass_monomial(ctx, I({"1"})).empty());
  CHECK(to_string(ass_monomial(ctx, I({"x*y"}))) == "{(x), (y)}");
  CHECK(to_string(ass_monomial(ctx, I({"x^3", "x*y^2"}))) == "{(x), (x, y)}");
  CHECK_THROWS_AS(ass_monomial(ctx, I({"x+y"})), PreconditionError);
  const Submodule m(r, 2, {ModuleElement(r, {P("x"), P("0")})});
  CHECK(to_string(ass_monomial(ctx, m)) == "{(0), (x)}");
}

TEST_CASE_FIXTURE(Fixture, "membership") {
  const Submodule j = I({"x^2", "x*y"});
  CHECK(ass_membership(prime({"x"}), j));
  CHECK_FALSE(ass_membership(prime({"y"}), j));
  CHECK(ass_membership(prime({"x", "y"}), j));
  CHECK_FALSE(ass_membership(PrimeIdeal::zero(ctx), j));
  CHECK_FALSE(ass_membership(PrimeIdeal::zero(ctx), I({"x"})));
  CHECK(ass_membership(PrimeIdeal::zero(ctx), Submodule::zero(r, 1)));
}

TEST_CASE("univariate associated primes") {
  auto r = make_ring({"t"});
  auto ctx = RingContext::univariate(r);
  auto P = [&](const char* s) { return parse_polynomial(r, s); };
  CHECK(to_string(ass_univariate(ctx, ModulePresentation::quotient(Submodule::ideal(r, {P("t^2")})))) == "{(t)}");
  const ModulePresentation m(r, 2, std::vector<ModuleElement>{ModuleElement(r, {P("0"), P("t-1")})});
  CHECK(to_string(ass_univariate(ctx, m)) == "{(0), (t - 1)}");
  CHECK(to_string(ass_univariate(ctx, ModulePresentation::free(r, 1))) == "{(0)}");
  CHECK(to_string(ass(ctx, Submodule::ideal(r, {P("(t^2+1)*(t-2)^2")}))) == "{(t - 2), (t^2 + 1)}");
  auto q = make_ring({"t"}, Field::prime(2));
  auto cq = RingContext::univariate(q);
  CHECK(to_string(ass(cq, Submodule::ideal(q, {parse_polynomial(q, "t^2+1")}))) == "{(t + 1)}");
}

TEST_CASE("property: splitting agrees with the brute-force oracle") {
  for (std::size_t n : {1u, 2u, 3u}) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto r = make_ring(names);
    auto ctx = RingContext::monomial(r);
    testgen::Rng g{n * 31 + 7};
    for (int it = 0; it < 150; ++it) {
      const Submodule j = testgen::monomial_submodule(r, g, 1, 4, 4);
      std::vector<Monomial> gens;
      for (const auto& b : j.basis()) gens.push_back(b[0].leading_monomial());
      if (j.is_full()) {
        CHECK(ass_monomial(ctx, j).empty());
        continue;
      }
      std::set<std::uint64_t> got;
      for (const auto& p : ass_monomial(ctx, j)) got.insert(p.mask());
      CHECK(got == brute_force_ass(gens, n));
    }
  }
}

TEST_CASE("property: splitting and local membership routes agree") {
  auto r = make_ring({"x", "y", "z"});
  auto ctx = RingContext::monomial(r);
  testgen::Rng g{77};
  for (int it = 0; it < 40; ++it) {
    const Submodule j = testgen::monomial_submodule(r, g, 1 + g(2), 4, 4);
    const AssSet a = ass_monomial(ctx, j);
    CHECK(a == ass_by_membership(ctx, j));
    CHECK(a.empty() == j.is_full());
  }
}

TEST_CASE("property: membership is invariant under localization") {
  auto r = make_ring({"x", "y", "z"});
  auto ctx = RingContext::monomial(r);
  testgen::Rng g{5};
  const auto primes = all_monomial_primes(ctx);
  for (int it = 0; it < 15; ++it) {
    const Submodule j = testgen::monomial_submodule(r, g, 1, 4, 3);
    for (const auto& q : primes) {
      const Submodule local = contract(j, q);
      for (const auto& p : primes)
        if (specializes(p, q)) CHECK(ass_membership(p, j) == ass_membership(p, local));
    }
  }
}
