#include "germs/germs_category.hpp"

#include <algorithm>

#include "germs/error.hpp"
#include "germs/parallel.hpp"

namespace germs {

namespace {

std::vector<Submodule> stalk_kernels(const GermsCohObject& s) {
  std::vector<Submodule> out;
  for (std::size_t i = 0; i < s.primes.size(); ++i) out.push_back(kernel_of_localization(s.stalks[i], s.primes[i]));
  return out;
}

bool columns_in(const Matrix& m, const Submodule& k) {
  for (const auto& c : m.columns())
    if (!k.contains(c)) return false;
  return true;
}

void check_shape(const GermsCohObject& s) {
  if (s.primes.size() != s.stalks.size()) throw PreconditionError("one stalk per prime is required");
  for (std::size_t i = 0; i < s.primes.size(); ++i) {
    if (!(s.primes[i].context() == s.context)) throw RingMismatch("prime from another ring context");
    require_same_ring(s.context.ring, s.stalks[i].ring);
    for (std::size_t j = 0; j < i; ++j)
      if (s.primes[j] == s.primes[i]) throw PreconditionError("prime " + s.label(i) + " listed twice");
  }
  for (const auto& t : s.sigma) {
    if (t.x >= s.primes.size() || t.y >= s.primes.size()) throw PreconditionError("transition index out of range");
    if (t.x == t.y || !specializes(s.primes[t.x], s.primes[t.y]))
      throw PreconditionError("transition from " + s.label(t.y) + " to " + s.label(t.x) + " is not a specialization");
    if (t.map.numerator.rows() != s.stalks[t.x].generators || t.map.numerator.cols() != s.stalks[t.y].generators)
      throw RankMismatch("transition " + s.label(t.y) + " -> " + s.label(t.x) + " has the wrong shape");
    if (s.primes[t.x].contains(t.map.denominator))
      throw PreconditionError("transition denominator lies in " + s.label(t.x));
  }
}

}  // namespace

const Transition* GermsCohObject::find(std::size_t x, std::size_t y) const {
  for (const auto& t : sigma)
    if (t.x == x && t.y == y) return &t;
  return nullptr;
}

ObjectCheck validate_object(const GermsCohObject& s) {
  check_shape(s);
  ObjectCheck out;
  const auto kernels = stalk_kernels(s);
  for (std::size_t x = 0; x < s.primes.size(); ++x)
    for (std::size_t y = 0; y < s.primes.size(); ++y) {
      if (x == y || !specializes(s.primes[x], s.primes[y])) continue;
      const std::string pair = s.label(y) + " -> " + s.label(x);
      const Transition* t = s.find(x, y);
      if (!t) {
        out.problems.push_back("missing transition " + pair);
        continue;
      }
      const Matrix& n = t->map.numerator;
      if (!columns_in(Matrix::from_columns(s.context.ring, n.rows(), [&] {
                        std::vector<ModuleElement> cols;
                        for (const auto& r : s.stalks[y].relations.basis()) cols.push_back(n * r);
                        return cols;
                      }()),
                      kernels[x])) {
        out.problems.push_back("transition " + pair + " does not respect the relations");
        continue;
      }
      // Surjective: image + kernel contracts to everything. Injective: the
      // preimage of the kernel is the kernel of S(y) -> S(y)_x.
      std::vector<ModuleElement> gens = n.columns();
      for (const auto& k : kernels[x].generators()) gens.push_back(k);
      const Submodule img = contract(Submodule(s.context.ring, n.rows(), gens), s.primes[x]);
      const Submodule pre = preimage(n, kernels[x]);
      const Submodule ker_y = kernel_of_localization(s.stalks[y], s.primes[x]);
      if (!img.is_full()) out.problems.push_back("transition " + pair + " is not surjective");
      else if (!ker_y.contains(pre)) out.problems.push_back("transition " + pair + " is not injective");
    }
  out.ok = out.problems.empty();
  return out;
}

CocycleReport cocycle_check(const GermsCohObject& s, unsigned jobs) {
  check_shape(s);
  struct Chain {
    std::size_t x0, x1, x2;
  };
  std::vector<Chain> chains;
  for (const auto& a : s.sigma)
    for (const auto& b : s.sigma)
      if (a.y == b.x && s.find(a.x, b.y)) chains.push_back({a.x, a.y, b.y});
  const auto kernels = stalk_kernels(s);
  const auto ok = parallel_map<char>(chains.size(), jobs, [&](std::size_t i) -> char {
    const auto& c = chains[i];
    const GermMap& s01 = s.find(c.x0, c.x1)->map;
    const GermMap& s12 = s.find(c.x1, c.x2)->map;
    const GermMap& s02 = s.find(c.x0, c.x2)->map;
    const Matrix d = s02.numerator.scaled(s01.denominator * s12.denominator) -
                     (s01.numerator * s12.numerator).scaled(s02.denominator);
    return columns_in(d, kernels[c.x0]) ? 1 : 0;
  });
  CocycleReport rep;
  rep.triples_checked = chains.size();
  for (std::size_t i = 0; i < chains.size(); ++i)
    if (!ok[i]) {
      rep.pass = false;
      rep.violation = {s.label(chains[i].x0), s.label(chains[i].x1), s.label(chains[i].x2)};
      break;
    }
  return rep;
}

GermsCohObject pi_star(const RingContext& ctx, const ModulePresentation& e, const std::vector<PrimeIdeal>& primes) {
  require_same_ring(ctx.ring, e.ring);
  GermsCohObject s;
  s.context = ctx;
  s.primes = primes;
  for (const auto& p : primes) s.stalks.push_back(ModulePresentation(e.ring, e.generators, kernel_of_localization(e, p)));
  const Matrix id = Matrix::identity(e.ring, e.generators);
  for (std::size_t x = 0; x < primes.size(); ++x)
    for (std::size_t y = 0; y < primes.size(); ++y)
      if (x != y && specializes(primes[x], primes[y]))
        s.sigma.push_back({x, y, {id, Polynomial::constant(e.ring, 1)}});
  return s;
}

GermsCohMorphism pi_star(const Matrix& phi, std::size_t nprimes) {
  return {std::vector<GermMap>(nprimes, GermMap{phi, Polynomial::constant(phi.ring(), 1)})};
}

GermsCohMorphism compose(const GermsCohMorphism& a, const GermsCohMorphism& b) {
  if (a.maps.size() != b.maps.size()) throw PreconditionError("morphisms over different posets");
  GermsCohMorphism out;
  for (std::size_t i = 0; i < a.maps.size(); ++i)
    out.maps.push_back({a.maps[i].numerator * b.maps[i].numerator, a.maps[i].denominator * b.maps[i].denominator});
  return out;
}

bool same_morphism(const GermsCohObject& t, const GermsCohMorphism& a, const GermsCohMorphism& b) {
  if (a.maps.size() != t.primes.size() || b.maps.size() != t.primes.size())
    throw PreconditionError("morphism has the wrong number of germs");
  const auto kernels = stalk_kernels(t);
  for (std::size_t x = 0; x < t.primes.size(); ++x) {
    const Matrix d =
        a.maps[x].numerator.scaled(b.maps[x].denominator) - b.maps[x].numerator.scaled(a.maps[x].denominator);
    if (!columns_in(d, kernels[x])) return false;
  }
  return true;
}

NaturalityReport naturality_check(const GermsCohObject& s, const GermsCohObject& t, const GermsCohMorphism& psi) {
  check_shape(s);
  check_shape(t);
  if (!(s.primes == t.primes)) throw PreconditionError("objects live on different posets");
  if (psi.maps.size() != s.primes.size()) throw PreconditionError("morphism has the wrong number of germs");
  const auto kernels = stalk_kernels(t);
  NaturalityReport rep;
  for (std::size_t x = 0; x < s.primes.size(); ++x) {
    const GermMap& m = psi.maps[x];
    if (m.numerator.rows() != t.stalks[x].generators || m.numerator.cols() != s.stalks[x].generators)
      throw RankMismatch("germ map at " + s.label(x) + " has the wrong shape");
    if (s.primes[x].contains(m.denominator)) throw PreconditionError("germ denominator lies in " + s.label(x));
    for (const auto& r : s.stalks[x].relations.basis())
      if (!kernels[x].contains(m.numerator * r)) {
        rep.pass = false;
        rep.smaller = rep.larger = s.label(x);
        rep.reason = "germ at " + s.label(x) + " does not respect the relations";
        return rep;
      }
  }
  for (const auto& ss : s.sigma) {
    const Transition* tt = t.find(ss.x, ss.y);
    if (!tt) throw PreconditionError("target object lacks the transition " + s.label(ss.y) + " -> " + s.label(ss.x));
    const GermMap& px = psi.maps[ss.x];
    const GermMap& py = psi.maps[ss.y];
    const Matrix lhs = (px.numerator * ss.map.numerator).scaled(tt->map.denominator * py.denominator);
    const Matrix rhs = (tt->map.numerator * py.numerator).scaled(px.denominator * ss.map.denominator);
    if (!columns_in(lhs - rhs, kernels[ss.x])) {
      rep.pass = false;
      rep.smaller = s.label(ss.x);
      rep.larger = s.label(ss.y);
      rep.reason = "naturality square " + rep.larger + " -> " + rep.smaller + " does not commute";
      return rep;
    }
  }
  return rep;
}

BSetReport b_set(const GermsCohObject& s) {
  check_shape(s);
  BSetReport rep;
  for (std::size_t x = 0; x < s.primes.size(); ++x)
    if (s.stalks[x].generators > 0 && ass_membership(s.primes[x], s.stalks[x].relations))
      rep.primes.push_back(s.primes[x]);
  rep.primes = canonical(std::move(rep.primes));
  if (s.pattern == "maximal-ideal") {
    rep.note = "stalks outside the poset are m_x or the local ring, nonzero and torsion-free";
  } else if (!s.pattern.empty()) {
    rep.verdict = FinitenessReport::Verdict::Undecided;
    rep.note = "pattern '" + s.pattern + "' outside the poset is not analyzed";
  }
  return rep;
}

FullyFaithfulResult fully_faithful_check(const ModulePresentation& e, const ModulePresentation& f,
                                         const GermsCohObject& obj_e, const GermsCohObject& obj_f,
                                         const GermsCohMorphism& psi, unsigned jobs) {
  FullyFaithfulResult res;
  res.naturality = naturality_check(obj_e, obj_f, psi);
  if (!res.naturality.pass) return res;
  std::vector<MapGerm> germs;
  for (std::size_t x = 0; x < obj_e.primes.size(); ++x)
    germs.push_back({obj_e.primes[x], psi.maps[x].numerator, psi.maps[x].denominator});
  res.phi = glue_homomorphism(obj_f.context, e, f, germs, jobs);
  if (!res.phi) return res;
  res.reproduces = true;
  for (std::size_t x = 0; x < obj_e.primes.size(); ++x) {
    const Matrix d = res.phi->scaled(psi.maps[x].denominator) - psi.maps[x].numerator;
    res.reproduces = res.reproduces && columns_in(d, kernel_of_localization(f, obj_e.primes[x]));
  }
  std::reverse(germs.begin(), germs.end());
  const auto again = glue_homomorphism(obj_f.context, e, f, germs, jobs);
  res.unique = again && same_map(*res.phi, *again, f);
  return res;
}

std::size_t generic_rank(const Matrix& a) {
  std::vector<std::vector<Polynomial>> m(a.rows(), std::vector<Polynomial>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  // Fraction-free elimination.
  Polynomial prev = Polynomial::constant(a.ring(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c].is_zero()) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        const Polynomial num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = divide_exact(num, prev);
        if (!q) throw Error("internal: inexact fraction-free elimination step");
        m[i][j] = *q;
      }
      m[i][c] = Polynomial(a.ring());
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t minimal_generators(const ModulePresentation& m, const PrimeIdeal& p) {
  require_same_ring(m.ring, p.context().ring);
  const std::size_t g = m.generators;
  if (p.context().flavor == Flavor::Univariate) {
    const SmithInvariants inv = smith_invariants(m);
    std::size_t mu = inv.free_rank;
    if (!p.is_zero())
      for (const auto& d : inv.invariants)
        if ((d % p.poly()).is_zero()) ++mu;
    return mu;
  }
  if (p.context().flavor != Flavor::Monomial) throw UnsupportedFlavor("minimal generators need a polynomial ring");
  // Present M ⊗ A/p over A/p, a polynomial ring in the variables outside p.
  const auto& rels = m.relations.basis();
  Matrix a(m.ring, g, rels.size());
  for (std::size_t j = 0; j < rels.size(); ++j)
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<Term> kept;
      for (const auto& t : rels[j][i].terms()) {
        bool inside = false;
        for (std::size_t v = 0; v < t.monomial.size() && !inside; ++v)
          inside = (p.mask() >> v & 1) && t.monomial[v] > 0;
        if (!inside) kept.push_back(t);
      }
      a(i, j) = Polynomial::from_terms(m.ring, std::move(kept));
    }
  return g - generic_rank(a);
}

std::size_t minimal_generators_at_point(const ModulePresentation& m, const std::vector<long>& point) {
  const RingPtr& ring = m.ring;
  if (point.size() != ring->nvars()) throw PreconditionError("point has the wrong number of coordinates");
  const std::size_t g = m.generators;
  std::vector<ModuleElement> gens = m.relations.generators();
  for (std::size_t v = 0; v < point.size(); ++v) {
    const Polynomial l = Polynomial::variable(ring, v) - Polynomial::constant(ring, point[v]);
    for (std::size_t c = 0; c < g; ++c) gens.push_back(ModuleElement::basis(ring, g, c).scaled(l));
  }
  // Each component contributes 1 or 0 standard monomials.
  std::vector<bool> killed(g, false);
  const Submodule s(ring, g, gens);
  for (const auto& b : s.basis())
    for (std::size_t c = 0; c < g; ++c)
      if (!b[c].is_zero()) {
        if (b[c].leading_monomial().is_one()) killed[c] = true;
        break;
      }
  return static_cast<std::size_t>(std::count(killed.begin(), killed.end(), false));
}

namespace {

RingPtr affine_ring(unsigned n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  std::vector<std::string> vars;
  if (n == 1) vars.push_back("t");
  else
    for (unsigned i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
  return make_ring(vars);
}

}  // namespace

GermsCohObject maximal_ideal_object(unsigned n) {
  const RingPtr ring = affine_ring(n);
  GermsCohObject s;
  s.context = RingContext::monomial(ring);
  s.primes = all_monomial_primes(s.context);
  s.pattern = "maximal-ideal";
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(ring, i));
  for (const auto& p : s.primes)
    s.stalks.push_back(p.is_maximal() ? ModulePresentation::of_submodule(Submodule::ideal(ring, vars))
                                      : ModulePresentation::free(ring, 1));
  const Polynomial one = Polynomial::constant(ring, 1);
  for (std::size_t x = 0; x < s.primes.size(); ++x)
    for (std::size_t y = 0; y < s.primes.size(); ++y) {
      if (x == y || !specializes(s.primes[x], s.primes[y])) continue;
      Matrix m(ring, 1, s.stalks[y].generators);
      if (s.primes[y].is_maximal())
        for (std::size_t i = 0; i < n; ++i) m(0, i) = vars[i];
      else
        m(0, 0) = one;
      s.sigma.push_back({x, y, {m, one}});
    }
  return s;
}

namespace {

void summarize(ObstructionReport& rep) {
  rep.obstruction = !rep.mu.empty();
  for (const auto mu : rep.mu) rep.obstruction = rep.obstruction && mu > rep.generic_rank;
  const bool all_equal = std::all_of(rep.mu.begin(), rep.mu.end(), [&](std::size_t m) { return m == rep.generic_rank; });
  if (rep.obstruction)
    rep.summary = "demo: mu exceeds the generic rank " + std::to_string(rep.generic_rank) +
                  " at every sampled closed point; a coherent module would match the generic rank on a dense open set, "
                  "so these stalks are evidence against one (not a proof)";
  else if (all_equal)
    rep.summary = "demo: no mu-obstruction, mu equals the generic rank at every sampled point; "
                  "the mu-test is inconclusive";
  else
    rep.summary = "demo: mu exceeds the generic rank only at some sampled points; no obstruction";
}

}  // namespace

ObstructionReport maximal_ideal_obstruction(unsigned n) {
  const GermsCohObject s = maximal_ideal_object(n);
  ObstructionReport rep;
  rep.n = n;
  rep.generic_rank = minimal_generators(s.stalks.front(), s.primes.front());
  const RingPtr& ring = s.context.ring;
  const std::vector<std::vector<long>> samples{{0, 0, 0, 0}, {1, 0, 2, -1}, {-1, 3, 1, 2}, {2, -2, 0, 5}, {5, 1, -3, 1}};
  for (const auto& sample : samples) {
    std::vector<long> point(n);
    for (unsigned i = 0; i < n; ++i) point[i] = sample[i % sample.size()] + static_cast<long>(i / sample.size());
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < n; ++i)
      gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
    const ModulePresentation m_a = ModulePresentation::of_submodule(Submodule::ideal(ring, gens));
    rep.points.push_back(point);
    rep.mu.push_back(minimal_generators_at_point(m_a, point));
  }
  summarize(rep);
  if (!rep.obstruction && n == 1) rep.summary += "; for n = 1 nonexistence needs a separate argument";
  return rep;
}

ObstructionReport mu_obstruction(const GermsCohObject& s) {
  check_shape(s);
  ObstructionReport rep;
  rep.n = static_cast<unsigned>(s.context.ring->nvars());
  bool has_zero = false;
  for (std::size_t x = 0; x < s.primes.size(); ++x) {
    if (s.primes[x].is_zero()) {
      has_zero = true;
      rep.generic_rank = minimal_generators(s.stalks[x], s.primes[x]);
    }
  }
  if (!has_zero) throw PreconditionError("the poset must contain the zero prime");
  for (std::size_t x = 0; x < s.primes.size(); ++x)
    if (s.primes[x].is_maximal()) rep.mu.push_back(minimal_generators(s.stalks[x], s.primes[x]));
  summarize(rep);
  return rep;
}

}  // namespace germs
