#include "germs/groebner.hpp"

#include <algorithm>
#include <mutex>

#include "germs/error.hpp"

namespace germs {

namespace {

struct VTerm {
  Monomial m;
  std::uint32_t comp;
  Scalar c;
};

// Module vector as one descending term list.
using Vec = std::vector<VTerm>;

class ModOrder {
 public:
  ModOrder(const MonomialOrder& ord, Position pos) : ord_(ord), pos_(pos) {}

  int operator()(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (int c = ord_.compare_block(a, b)) return c;
    if (pos_ == Position::OverTerm && ca != cb) return ca < cb ? 1 : -1;
    if (int c = ord_.compare_rest(a, b)) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  int operator()(const VTerm& a, const VTerm& b) const { return (*this)(a.m, a.comp, b.m, b.comp); }

 private:
  MonomialOrder ord_;
  Position pos_;
};

Vec to_vec(const ModuleElement& w, const ModOrder& o) {
  Vec v;
  for (std::size_t i = 0; i < w.rank(); ++i)
    for (const auto& t : w[i].terms()) v.push_back({t.monomial, static_cast<std::uint32_t>(i), t.coeff});
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return o(a, b) > 0; });
  return v;
}

ModuleElement from_vec(const RingPtr& ring, std::size_t rank, const Vec& v) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps[t.comp].push_back({t.m, t.c});
  std::vector<Polynomial> polys;
  polys.reserve(rank);
  for (auto& c : comps) polys.push_back(Polynomial::from_terms(ring, std::move(c)));
  return ModuleElement(ring, std::move(polys));
}

// v[from..] - c*m*g
Vec sub_mul(const Vec& v, std::size_t from, const Scalar& c, const Monomial& m, const Vec& g,
            const ModOrder& o) {
  Vec out;
  out.reserve(v.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < v.size() && j < g.size()) {
    Monomial gm = g[j].m * m;
    int cmp = o(v[i].m, v[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(v[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), g[j].comp, -(c * g[j].c)});
      ++j;
    } else {
      Scalar s = v[i].c - c * g[j].c;
      if (!s.is_zero()) out.push_back({v[i].m, v[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < v.size(); ++i) out.push_back(v[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * m, g[j].comp, -(c * g[j].c)});
  return out;
}

void make_monic(Vec& v) {
  if (v.empty() || v.front().c.is_one()) return;
  const Scalar inv = v.front().c.inverse();
  for (auto& t : v) t.c *= inv;
}

const Vec* find_divisor(const VTerm& t, const std::vector<const Vec*>& basis) {
  for (const Vec* g : basis)
    if (g->front().comp == t.comp && g->front().m.divides(t.m)) return g;
  return nullptr;
}

// Full reduction: no term of the result is divisible by a leading term.
Vec reduce_full(Vec f, const std::vector<const Vec*>& basis, const ModOrder& o) {
  Vec result;
  std::size_t head = 0;
  while (head < f.size()) {
    const VTerm& lt = f[head];
    if (const Vec* g = find_divisor(lt, basis)) {
      const Scalar c = lt.c / g->front().c;
      const Monomial q = lt.m / g->front().m;
      f = sub_mul(f, head, c, q, *g, o);
      head = 0;
    } else {
      result.push_back(lt);
      ++head;
    }
  }
  return result;
}

// Top reduction only, used when only the leading term matters.
Vec reduce_top(Vec f, const std::vector<const Vec*>& basis, const ModOrder& o) {
  while (!f.empty()) {
    const Vec* g = find_divisor(f.front(), basis);
    if (!g) break;
    const Scalar c = f.front().c / g->front().c;
    const Monomial q = f.front().m / g->front().m;
    f = sub_mul(f, 0, c, q, *g, o);
  }
  return f;
}

Vec s_vector(const Vec& a, const Vec& b, const ModOrder& o) {
  const Monomial l = lcm(a.front().m, b.front().m);
  const Monomial qa = l / a.front().m;
  const Monomial qb = l / b.front().m;
  Vec sa;
  sa.reserve(a.size());
  const Scalar ia = a.front().c.inverse();
  for (const auto& t : a) sa.push_back({t.m * qa, t.comp, t.c * ia});
  return sub_mul(sa, 0, b.front().c.inverse(), qb, b, o);
}

std::uint64_t max_degree(const Vec& v) {
  std::uint64_t d = 0;
  for (const auto& t : v) d = std::max(d, t.m.degree());
  return d;
}

// Buchberger's algorithm with the Gebauer-Moeller pair update and the sugar
// selection strategy. The product criterion is only sound for ideals, so it
// is restricted to rank one.
std::vector<Vec> buchberger(std::vector<Vec> input, const ModOrder& o, bool rank_one) {
  std::vector<Vec> polys;
  std::vector<std::uint64_t> sugar;
  std::vector<bool> active;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    std::uint64_t sugar;
  };
  std::vector<Pair> pairs;

  auto active_basis = [&]() {
    std::vector<const Vec*> out;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) out.push_back(&polys[i]);
    return out;
  };

  auto update = [&](std::size_t k) {
    const VTerm& hk = polys[k].front();
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && polys[i].front().comp == hk.comp) cands.push_back(i);
    auto lcm_with = [&](std::size_t i) { return lcm(polys[i].front().m, hk.m); };
    auto coprime = [&](std::size_t i) {
      return rank_one && gcd(polys[i].front().m, hk.m).is_one();
    };

    std::vector<std::size_t> kept;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      const std::size_t i = cands[idx];
      const Monomial li = lcm_with(i);
      bool keep = coprime(i);
      if (!keep) {
        bool dominated = false;
        for (std::size_t jdx = idx + 1; jdx < cands.size() && !dominated; ++jdx)
          dominated = lcm_with(cands[jdx]).divides(li);
        for (std::size_t j : kept)
          if (!dominated) dominated = lcm_with(j).divides(li);
        keep = !dominated;
      }
      if (keep) kept.push_back(i);
    }

    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
      if (p.comp == hk.comp && hk.m.divides(p.lcm) && lcm(polys[p.i].front().m, hk.m) != p.lcm &&
          lcm(polys[p.j].front().m, hk.m) != p.lcm)
        continue;
      next.push_back(std::move(p));
    }
    for (std::size_t i : kept) {
      if (coprime(i)) continue;
      Monomial l = lcm_with(i);
      const std::uint64_t d = l.degree();
      const std::uint64_t s = std::max(sugar[i] + d - polys[i].front().m.degree(),
                                       sugar[k] + d - hk.m.degree());
      next.push_back({i, k, std::move(l), hk.comp, s});
    }
    pairs = std::move(next);

    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && polys[i].front().comp == hk.comp && hk.m.divides(polys[i].front().m))
        active[i] = false;
  };

  auto insert = [&](Vec h, std::uint64_t s) {
    make_monic(h);
    polys.push_back(std::move(h));
    sugar.push_back(s);
    active.push_back(true);
    update(polys.size() - 1);
  };

  for (auto& f : input) {
    if (f.empty()) continue;
    const std::uint64_t s = max_degree(f);
    Vec h = reduce_full(std::move(f), active_basis(), o);
    if (!h.empty()) insert(std::move(h), std::max(s, max_degree(h)));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = o(a.lcm, a.comp, b.lcm, b.comp);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Vec h = reduce_top(s_vector(polys[p.i], polys[p.j], o), active_basis(), o);
    if (!h.empty()) insert(std::move(h), p.sugar);
  }

  // Inter-reduce the minimal basis.
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) minimal.push_back(polys[i]);
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Vec*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    Vec tail(minimal[i].begin() + 1, minimal[i].end());
    Vec r{minimal[i].front()};
    Vec red = reduce_full(std::move(tail), others, o);
    r.insert(r.end(), red.begin(), red.end());
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Vec& a, const Vec& b) { return o(a.front(), b.front()) > 0; });
  return reduced;
}

std::vector<Vec> to_vecs(const std::vector<ModuleElement>& gens, const ModOrder& o) {
  std::vector<Vec> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(to_vec(g, o));
  return out;
}

// Stacks (top, tag) into one element of A^(r+k).
ModuleElement stack(const ModuleElement& top, const ModuleElement& bottom) {
  std::vector<Polynomial> comps = top.components();
  comps.insert(comps.end(), bottom.components().begin(), bottom.components().end());
  return ModuleElement(top.ring(), std::move(comps));
}

ModuleElement slice(const ModuleElement& w, std::size_t from, std::size_t count) {
  std::vector<Polynomial> comps(w.components().begin() + static_cast<std::ptrdiff_t>(from),
                                w.components().begin() + static_cast<std::ptrdiff_t>(from + count));
  return ModuleElement(w.ring(), std::move(comps));
}

bool slice_is_zero(const ModuleElement& w, std::size_t from, std::size_t count) {
  for (std::size_t i = from; i < from + count; ++i)
    if (!w[i].is_zero()) return false;
  return true;
}

}  // namespace

struct GroebnerCache {
  std::once_flag gb_once;
  std::vector<ModuleElement> gb;
  bool monomial = false;
  // Basis of {(g_i, e_i)} used for lifting, computed on demand.
  std::once_flag tagged_once;
  std::vector<ModuleElement> tagged;
};

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<ModuleElement> generators)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<GroebnerCache>()) {
  if (!ring_) throw Error("submodule without ring");
  for (auto& g : generators) {
    if (g.rank() != rank_)
      throw RankMismatch("generator of rank " + std::to_string(g.rank()) +
                         " in submodule of rank " + std::to_string(rank_));
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Submodule Submodule::zero(const RingPtr& ring, std::size_t rank) { return Submodule(ring, rank, {}); }

Submodule Submodule::full(const RingPtr& ring, std::size_t rank) {
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(ModuleElement::basis(ring, rank, i));
  return Submodule(ring, rank, std::move(gens));
}

Submodule Submodule::ideal(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  std::vector<ModuleElement> gens;
  for (const auto& g : generators) gens.emplace_back(ring, std::vector<Polynomial>{g});
  return Submodule(ring, 1, std::move(gens));
}

const std::vector<ModuleElement>& Submodule::basis() const {
  if (!cache_) throw Error("basis() on default-constructed submodule");
  std::call_once(cache_->gb_once, [this] {
    cache_->gb = groebner_basis(ring_, rank_, gens_);
    cache_->monomial = std::all_of(cache_->gb.begin(), cache_->gb.end(),
                                   [](const ModuleElement& g) { return g.is_monomial(); });
  });
  return cache_->gb;
}

bool Submodule::is_zero() const { return basis().empty(); }

bool Submodule::is_full() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (!contains(ModuleElement::basis(ring_, rank_, i))) return false;
  return true;
}

bool Submodule::is_monomial() const {
  basis();
  return cache_->monomial;
}

ModuleElement Submodule::normal_form(const ModuleElement& w) const {
  if (w.rank() != rank_) throw RankMismatch("element rank differs from submodule rank");
  return germs::normal_form(w, basis());
}

bool Submodule::contains(const ModuleElement& w) const { return normal_form(w).is_zero(); }

bool Submodule::contains(const Submodule& other) const {
  if (other.rank_ != rank_) throw RankMismatch("submodules of different rank");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string Submodule::to_string() const {
  const auto& b = basis();
  if (b.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + b[i].to_string();
  return s + ")";
}

bool operator==(const Submodule& a, const Submodule& b) {
  if (a.rank_ != b.rank_ || !same_ring(a.ring_, b.ring_)) return false;
  return a.basis() == b.basis();
}

ModulePresentation::ModulePresentation(RingPtr r, std::size_t g, std::vector<ModuleElement> rels)
    : ring(r), generators(g), relations(r, g, std::move(rels)) {}

ModulePresentation::ModulePresentation(RingPtr r, std::size_t g, Submodule rels)
    : ring(std::move(r)), generators(g), relations(std::move(rels)) {
  if (relations.rank() != generators) throw RankMismatch("relations do not match generator count");
}

ModulePresentation ModulePresentation::free(const RingPtr& ring, std::size_t g) {
  return ModulePresentation(ring, g, Submodule::zero(ring, g));
}

ModulePresentation ModulePresentation::of_submodule(const Submodule& s) { return syzygies(s); }

ModulePresentation ModulePresentation::quotient(const Submodule& s) {
  return ModulePresentation(s.ring(), s.rank(), s);
}

std::string ModulePresentation::to_string() const {
  return "A^" + std::to_string(generators) + " / " + relations.to_string();
}

Matrix HomModule::evaluate(const std::vector<Polynomial>& coefficients) const {
  if (coefficients.size() != generator_maps.size())
    throw RankMismatch("hom coefficients do not match generator count");
  Matrix m(presentation.ring, target_generators, source_generators);
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    m = m + generator_maps[j].scaled(coefficients[j]);
  return m;
}

std::vector<ModuleElement> groebner_basis(const RingPtr& ring, std::size_t rank,
                                          const std::vector<ModuleElement>& generators,
                                          Position position) {
  const ModOrder o(ring->order(), position);
  std::vector<Vec> gb = buchberger(to_vecs(generators, o), o, rank == 1);
  std::vector<ModuleElement> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(from_vec(ring, rank, v));
  return out;
}

Submodule groebner(const Submodule& s) {
  s.basis();
  return s;
}

ModuleElement normal_form(const ModuleElement& w, const std::vector<ModuleElement>& basis,
                          Position position) {
  const ModOrder o(w.ring()->order(), position);
  std::vector<Vec> vb = to_vecs(basis, o);
  std::vector<const Vec*> ptrs;
  for (const auto& v : vb)
    if (!v.empty()) ptrs.push_back(&v);
  return from_vec(w.ring(), w.rank(), reduce_full(to_vec(w, o), ptrs, o));
}

bool is_groebner_basis(const std::vector<ModuleElement>& basis, Position position) {
  if (basis.empty()) return true;
  const ModOrder o(basis.front().ring()->order(), position);
  std::vector<Vec> vb = to_vecs(basis, o);
  std::vector<const Vec*> ptrs;
  for (const auto& v : vb)
    if (!v.empty()) ptrs.push_back(&v);
  for (std::size_t i = 0; i < ptrs.size(); ++i)
    for (std::size_t j = i + 1; j < ptrs.size(); ++j) {
      if (ptrs[i]->front().comp != ptrs[j]->front().comp) continue;
      if (!reduce_top(s_vector(*ptrs[i], *ptrs[j], o), ptrs, o).empty()) return false;
    }
  return true;
}

bool member(const ModuleElement& w, const Submodule& s) { return s.contains(w); }

std::optional<std::vector<Polynomial>> lift(const ModuleElement& w, const Submodule& s) {
  if (w.rank() != s.rank()) throw RankMismatch("lift: element rank differs from submodule rank");
  const RingPtr& ring = s.ring();
  const std::size_t r = s.rank();
  const std::size_t k = s.generators().size();
  std::call_once(s.cache_->tagged_once, [&] {
    std::vector<ModuleElement> tagged;
    for (std::size_t i = 0; i < k; ++i)
      tagged.push_back(stack(s.generators()[i], ModuleElement::basis(ring, k, i)));
    s.cache_->tagged = groebner_basis(ring, r + k, tagged);
  });
  const ModuleElement rem = normal_form(stack(w, ModuleElement(ring, k)), s.cache_->tagged);
  if (!slice_is_zero(rem, 0, r)) return std::nullopt;
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < k; ++i) coeffs.push_back(-rem[r + i]);
  return coeffs;
}

Submodule sum(const Submodule& s, const Submodule& t) {
  require_same_ring(s.ring(), t.ring());
  if (s.rank() != t.rank()) throw RankMismatch("sum of submodules of different rank");
  std::vector<ModuleElement> gens = s.generators();
  gens.insert(gens.end(), t.generators().begin(), t.generators().end());
  return Submodule(s.ring(), s.rank(), std::move(gens));
}

Submodule scale(const Submodule& s, const Polynomial& f) {
  std::vector<ModuleElement> gens;
  for (const auto& g : s.generators()) gens.push_back(g.scaled(f));
  return Submodule(s.ring(), s.rank(), std::move(gens));
}

Submodule intersect(const Submodule& s, const Submodule& t) {
  require_same_ring(s.ring(), t.ring());
  if (s.rank() != t.rank()) throw RankMismatch("intersection of submodules of different rank");
  const RingPtr& ring = s.ring();
  if (s.is_zero() || t.is_zero()) return Submodule::zero(ring, s.rank());
  if (s.contains(t)) return t;
  if (t.contains(s)) return s;

  std::vector<std::string> names{"_elim_t"};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  const RingPtr ext =
      make_ring(names, ring->field(), MonomialOrder::elimination(1, ring->order().kind));
  std::vector<std::size_t> up(ring->nvars());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;

  auto lift_elem = [&](const ModuleElement& w, const Polynomial& factor) {
    std::vector<Polynomial> comps;
    for (const auto& c : w.components()) comps.push_back(c.map_to(ext, up) * factor);
    return ModuleElement(ext, std::move(comps));
  };
  const Polynomial tvar = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - tvar;
  std::vector<ModuleElement> gens;
  for (const auto& g : s.basis()) gens.push_back(lift_elem(g, tvar));
  for (const auto& g : t.basis()) gens.push_back(lift_elem(g, one_minus_t));

  std::vector<ModuleElement> result;
  for (const auto& g : groebner_basis(ext, s.rank(), gens, Position::TermOver)) {
    bool has_t = false;
    for (const auto& c : g.components())
      for (const auto& term : c.terms()) has_t = has_t || term.monomial[0] != 0;
    if (has_t) continue;
    std::vector<Polynomial> comps;
    for (const auto& c : g.components()) {
      std::vector<Term> terms;
      for (const auto& term : c.terms()) {
        Monomial m(ring->nvars());
        for (std::size_t i = 0; i < ring->nvars(); ++i) m[i] = term.monomial[i + 1];
        terms.push_back({std::move(m), term.coeff});
      }
      comps.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    result.emplace_back(ring, std::move(comps));
  }
  return Submodule(ring, s.rank(), std::move(result));
}

Submodule intersect_via_syzygies(const Submodule& s, const Submodule& t) {
  require_same_ring(s.ring(), t.ring());
  if (s.rank() != t.rank()) throw RankMismatch("intersection of submodules of different rank");
  const RingPtr& ring = s.ring();
  const std::size_t r = s.rank();
  std::vector<ModuleElement> gens;
  for (const auto& g : s.generators()) gens.push_back(stack(g, g));
  for (const auto& g : t.generators()) gens.push_back(stack(g, ModuleElement(ring, r)));
  std::vector<ModuleElement> result;
  for (const auto& g : groebner_basis(ring, 2 * r, gens))
    if (slice_is_zero(g, 0, r)) result.push_back(slice(g, r, r));
  return Submodule(ring, r, std::move(result));
}

std::optional<ModuleElement> divide_exact(const ModuleElement& w, const Polynomial& f) {
  std::vector<Polynomial> comps;
  for (const auto& c : w.components()) {
    auto q = divide_exact(c, f);
    if (!q) return std::nullopt;
    comps.push_back(std::move(*q));
  }
  return ModuleElement(w.ring(), std::move(comps));
}

Submodule quotient(const Submodule& s, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("quotient by the zero polynomial");
  require_same_ring(s.ring(), f.ring());
  if (f.is_constant()) return s;
  const Submodule inter = intersect(s, scale(Submodule::full(s.ring(), s.rank()), f));
  std::vector<ModuleElement> gens;
  for (const auto& g : inter.basis()) {
    auto q = divide_exact(g, f);
    if (!q) throw Error("internal: intersection with f*E not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Submodule(s.ring(), s.rank(), std::move(gens));
}

Submodule quotient(const Submodule& s, const std::vector<Polynomial>& ideal) {
  Submodule acc = Submodule::full(s.ring(), s.rank());
  bool first = true;
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    Submodule q = quotient(s, g);
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return acc;
}

Saturation saturate(const Submodule& s, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  Submodule cur = s;
  unsigned n = 0;
  for (;;) {
    Submodule next = quotient(cur, f);
    if (next == cur) return {cur, n};
    cur = std::move(next);
    ++n;
  }
}

ModulePresentation syzygies(const RingPtr& ring, std::size_t rank,
                            const std::vector<ModuleElement>& generators) {
  const std::size_t k = generators.size();
  std::vector<ModuleElement> tagged;
  for (std::size_t i = 0; i < k; ++i)
    tagged.push_back(stack(generators[i], ModuleElement::basis(ring, k, i)));
  std::vector<ModuleElement> rels;
  for (const auto& g : groebner_basis(ring, rank + k, tagged))
    if (slice_is_zero(g, 0, rank)) rels.push_back(slice(g, rank, k));
  return ModulePresentation(ring, k, std::move(rels));
}

ModulePresentation syzygies(const Submodule& s) {
  return syzygies(s.ring(), s.rank(), s.generators());
}

Submodule preimage(const Matrix& a, const Submodule& target) {
  if (a.rows() != target.rank()) throw RankMismatch("preimage: matrix rows differ from target rank");
  std::vector<ModuleElement> gens = a.columns();
  const std::size_t n = a.cols();
  for (const auto& g : target.generators()) gens.push_back(g);
  const ModulePresentation syz = syzygies(target.ring(), a.rows(), gens);
  std::vector<ModuleElement> out;
  for (const auto& rel : syz.relations.basis()) out.push_back(slice(rel, 0, n));
  return Submodule(target.ring(), n, std::move(out));
}

Submodule image(const Matrix& a, const Submodule& s) {
  if (a.cols() != s.rank()) throw RankMismatch("image: matrix columns differ from submodule rank");
  std::vector<ModuleElement> gens;
  for (const auto& g : s.generators()) gens.push_back(a * g);
  return Submodule(s.ring(), a.rows(), std::move(gens));
}

HomModule hom_module(const ModulePresentation& e, const ModulePresentation& f) {
  require_same_ring(e.ring, f.ring);
  const RingPtr& ring = e.ring;
  const std::size_t a = e.generators;
  const std::size_t b = f.generators;
  const std::size_t ab = a * b;
  const std::vector<ModuleElement>& rels_e = e.relations.basis();
  const std::vector<ModuleElement>& rels_f = f.relations.basis();
  const std::size_t m = rels_e.size();

  // Well-defined matrices: Phi * rho ∈ im(R_F) for every relation rho of E.
  Submodule kernel = Submodule::full(ring, ab);
  if (m > 0 && b > 0) {
    std::vector<ModuleElement> cols;
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t i = 0; i < b; ++i) {
        ModuleElement c(ring, b * m);
        for (std::size_t k = 0; k < m; ++k) c[k * b + i] = rels_e[k][j];
        cols.push_back(std::move(c));
      }
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& r : rels_f) {
        ModuleElement c(ring, b * m);
        for (std::size_t i = 0; i < b; ++i) c[k * b + i] = r[i];
        cols.push_back(std::move(c));
      }
    const ModulePresentation syz = syzygies(ring, b * m, cols);
    std::vector<ModuleElement> gens;
    for (const auto& rel : syz.relations.basis()) gens.push_back(slice(rel, 0, ab));
    kernel = Submodule(ring, ab, std::move(gens));
  }

  std::vector<ModuleElement> zero_gens;
  for (std::size_t j = 0; j < a; ++j)
    for (const auto& r : rels_f) {
      ModuleElement c(ring, ab);
      for (std::size_t i = 0; i < b; ++i) c[j * b + i] = r[i];
      zero_gens.push_back(std::move(c));
    }
  Submodule zero_maps(ring, ab, std::move(zero_gens));

  std::vector<ModuleElement> hom_gens;
  for (const auto& g : kernel.basis())
    if (!zero_maps.contains(g)) hom_gens.push_back(g);

  std::vector<ModuleElement> stacked = hom_gens;
  stacked.insert(stacked.end(), zero_maps.generators().begin(), zero_maps.generators().end());
  const ModulePresentation syz = syzygies(ring, ab, stacked);
  std::vector<ModuleElement> rels;
  for (const auto& rel : syz.relations.basis()) {
    ModuleElement r = slice(rel, 0, hom_gens.size());
    if (!r.is_zero()) rels.push_back(std::move(r));
  }

  HomModule h;
  h.presentation = ModulePresentation(ring, hom_gens.size(), std::move(rels));
  for (const auto& g : hom_gens) h.generator_maps.push_back(Matrix::from_vec(g, b, a));
  h.kernel = std::move(kernel);
  h.zero_maps = std::move(zero_maps);
  h.source_generators = a;
  h.target_generators = b;
  return h;
}

}  // namespace germs
