#include "doctest.h"

#include "germs/error.hpp"
#include "germs/groebner.hpp"
#include "germs/parse.hpp"

using namespace germs;

namespace {
RingPtr qxy() { return make_ring({"x", "y"}); }
Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }
Submodule I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(r, g));
  return Submodule::ideal(r, ps);
}
ModuleElement V(const RingPtr& r, std::initializer_list<const char*> comps) {
  std::vector<Polynomial> ps;
  for (auto c : comps) ps.push_back(P(r, c));
  return ModuleElement(r, ps);
}

struct Lcg {
  std::uint64_t s;
  unsigned operator()(unsigned n) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned>(s >> 33) % n;
  }
};

Polynomial random_poly(const RingPtr& r, Lcg& g, unsigned terms, unsigned deg) {
  std::vector<Term> ts;
  for (unsigned i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m[v] = g(deg + 1);
    ts.push_back({m, Scalar(r->field(), static_cast<long>(g(9)) - 4)});
  }
  return Polynomial::from_terms(r, ts);
}
}  // namespace

TEST_CASE("reduced basis of an ideal") {
  auto r = qxy();
  CHECK(I(r, {"x+y", "x-y"}).to_string() == "(x, y)");
  CHECK(I(r, {"x^2", "x*y"}).to_string() == "(x^2, x*y)");
  CHECK(I(r, {"x^2+y", "x*y-1"}).contains(ModuleElement(P(r, "y^2+x"))));
  CHECK(I(r, {"1+x", "x"}).is_full());
  CHECK(Submodule::zero(r, 2).to_string() == "(0)");
}

TEST_CASE("membership and lift") {
  auto r = qxy();
  const Submodule s = I(r, {"x^2", "x*y"});
  CHECK_FALSE(member(ModuleElement(P(r, "y")), s));
  CHECK(member(ModuleElement(P(r, "x^3 + 2*x*y^5")), s));
  const ModuleElement w(P(r, "x^3 + 2*x*y^5"));
  auto c = lift(w, s);
  REQUIRE(c.has_value());
  CHECK(((*c)[0] * P(r, "x^2") + (*c)[1] * P(r, "x*y")) == w[0]);
  CHECK_FALSE(lift(ModuleElement(P(r, "y")), s).has_value());
}

TEST_CASE("module basis and normal form") {
  auto r = qxy();
  const Submodule s(r, 2, {V(r, {"x", "y"}), V(r, {"y", "x"})});
  CHECK(s.contains(V(r, {"x^2-y^2", "0"})));
  CHECK_FALSE(s.contains(V(r, {"x", "0"})));
  CHECK(is_groebner_basis(s.basis()));
  CHECK(s == Submodule(r, 2, {V(r, {"x+y", "x+y"}), V(r, {"x-y", "y-x"})}));
}

TEST_CASE("intersection") {
  auto r = qxy();
  CHECK(intersect(I(r, {"x"}), I(r, {"y"})).to_string() == "(x*y)");
  CHECK(intersect(I(r, {"x^2", "y"}), I(r, {"x", "y^2"})).to_string() == "(x^2, x*y, y^2)");
  CHECK(intersect_via_syzygies(I(r, {"x"}), I(r, {"y"})) == intersect(I(r, {"x"}), I(r, {"y"})));
}

TEST_CASE("quotient and saturation") {
  auto r = qxy();
  CHECK(quotient(I(r, {"x^2", "x*y"}), P(r, "x")).to_string() == "(x, y)");
  CHECK(quotient(I(r, {"x^2", "x*y"}), std::vector<Polynomial>{P(r, "x"), P(r, "y")}).to_string() ==
        "(x)");
  auto s1 = saturate(I(r, {"x^2*y"}), P(r, "x"));
  CHECK(s1.module.to_string() == "(y)");
  CHECK(s1.exponent == 2);
  auto s2 = saturate(I(r, {"x^2", "x*y"}), P(r, "y"));
  CHECK(s2.module.to_string() == "(x)");
  CHECK(s2.exponent == 1);
  auto s3 = saturate(I(r, {"x^2", "x*y"}), P(r, "x"));
  CHECK(s3.module.is_full());
  CHECK(s3.exponent == 2);
  CHECK_THROWS_AS(quotient(I(r, {"x"}), P(r, "0")), PreconditionError);
}

TEST_CASE("syzygies, preimage, hom") {
  auto r = qxy();
  auto syz = syzygies(r, 1, {ModuleElement(P(r, "x")), ModuleElement(P(r, "y"))});
  CHECK(syz.relations.to_string() == "([y, -x])");

  Matrix a(r, 1, 2);
  a(0, 0) = P(r, "x");
  a(0, 1) = P(r, "y");
  const Submodule pre = preimage(a, I(r, {"x*y"}));
  CHECK(pre.contains(V(r, {"y", "0"})));
  CHECK(pre.contains(V(r, {"0", "x"})));
  CHECK_FALSE(pre.contains(V(r, {"1", "0"})));

  // Hom(A/(x), A/(x)) = A/(x); Hom(A/(x), A/(xy)) is generated by 1 -> y with relation x.
  const auto ax = ModulePresentation::quotient(I(r, {"x"}));
  const auto ay = ModulePresentation::quotient(I(r, {"y"}));
  const auto axy = ModulePresentation::quotient(I(r, {"x*y"}));
  CHECK(hom_module(ax, ay).generator_maps.empty());
  const HomModule h1 = hom_module(ax, ax);
  REQUIRE(h1.generator_maps.size() == 1);
  CHECK(h1.presentation.relations.to_string() == "(x)");
  const HomModule h2 = hom_module(ax, axy);
  REQUIRE(h2.generator_maps.size() == 1);
  CHECK(h2.generator_maps[0].to_string() == "[[y]]");
  CHECK(h2.presentation.relations.to_string() == "(x)");
  const HomModule h3 = hom_module(ModulePresentation::free(r, 2), ay);
  CHECK(h3.generator_maps.size() == 2);
}

TEST_CASE("property: intersection routes agree and bases are canonical") {
  auto r = make_ring({"x", "y", "z"});
  Lcg g{7};
  for (int it = 0; it < 40; ++it) {
    const std::size_t rank = 1 + g(2);
    auto rand_sub = [&] {
      std::vector<ModuleElement> gens;
      const unsigned k = 1 + g(2);
      for (unsigned i = 0; i < k; ++i) {
        ModuleElement e(r, rank);
        for (std::size_t c = 0; c < rank; ++c) e[c] = random_poly(r, g, 1 + g(2), 1);
        gens.push_back(e);
      }
      return Submodule(r, rank, gens);
    };
    const Submodule s = rand_sub(), t = rand_sub();
    const Submodule a = intersect(s, t);
    const Submodule b = intersect_via_syzygies(s, t);
    CHECK(a == b);
    CHECK(s.contains(a));
    CHECK(t.contains(a));
    CHECK(is_groebner_basis(s.basis()));
    // Shuffled generators yield the same reduced basis.
    std::vector<ModuleElement> rev(s.generators().rbegin(), s.generators().rend());
    CHECK(Submodule(r, rank, rev).basis() == s.basis());
    for (const auto& gen : s.generators()) {
      auto c = lift(gen, s);
      REQUIRE(c.has_value());
    }
  }
}

TEST_CASE("GF(p) bases") {
  auto r = make_ring({"x", "y"}, Field::prime(2));
  CHECK(I(r, {"x^2+y^2", "x+y"}).to_string() == "(x + y)");
  CHECK(intersect(I(r, {"x+1"}), I(r, {"x"})).to_string() == "(x^2 + x)");
}

TEST_CASE("lex elimination") {
  auto r = make_ring({"x", "y"}, Field::rationals(), MonomialOrder::lex());
  const Submodule s = I(r, {"x-y^2", "y^3-1"});
  CHECK(s.contains(ModuleElement(P(r, "x^3-1"))));
}
