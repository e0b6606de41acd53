#include "germs/ass.hpp"

#include <algorithm>
#include <set>

#include "germs/error.hpp"

namespace germs {

AssSet canonical(AssSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string to_string(const AssSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].to_string();
  return out + "}";
}

bool contains(const AssSet& s, const PrimeIdeal& p) {
  return std::find(s.begin(), s.end(), p) != s.end();
}

namespace {

using Exps = std::vector<std::uint32_t>;

std::vector<Exps> minimalize(std::vector<Exps> gens) {
  auto divides = [](const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// Splits a monomial ideal into irreducible components, each recorded as the
// exponent vector of its pure-power generators (0 = variable absent).
void split(const std::vector<Exps>& gens, std::set<std::vector<Exps>>& seen, std::set<Exps>& components) {
  if (!seen.insert(gens).second) return;
  const std::size_t n = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    std::size_t support = 0, first = n;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) {
        ++support;
        if (first == n) first = i;
      }
    if (support < 2) continue;
    Exps power(n, 0), rest = g;
    power[first] = g[first];
    rest[first] = 0;
    std::vector<Exps> a = gens, b = gens;
    a.push_back(power);
    b.push_back(rest);
    split(minimalize(a), seen, components);
    split(minimalize(b), seen, components);
    return;
  }
  Exps comp(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) comp[i] = g[i];
  components.insert(comp);
}

// Primes of the irredundant irreducible decomposition of a proper, nonzero
// monomial ideal.
std::set<std::uint64_t> ideal_ass(const std::vector<Exps>& gens) {
  std::set<std::vector<Exps>> seen;
  std::set<Exps> comps;
  split(minimalize(gens), seen, comps);
  std::vector<Exps> list(comps.begin(), comps.end());
  // Q_b ⊆ Q_a iff every pure power of Q_b lies in Q_a.
  auto inside = [](const Exps& b, const Exps& a) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] && (!a[i] || a[i] > b[i])) return false;
    return true;
  };
  std::set<std::uint64_t> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < list.size() && !redundant; ++j)
      redundant = j != i && inside(list[j], list[i]);
    if (redundant) continue;
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < list[i].size(); ++k)
      if (list[i][k]) mask |= std::uint64_t{1} << k;
    out.insert(mask);
  }
  return out;
}

}  // namespace

AssSet ass_monomial(const RingContext& ctx, const Submodule& j) {
  if (ctx.flavor != Flavor::Monomial) throw UnsupportedFlavor("ass_monomial needs the monomial engine");
  require_same_ring(ctx.ring, j.ring());
  if (!j.is_monomial())
    throw PreconditionError("ass_monomial needs a monomial submodule; " + j.to_string() + " has mixed terms");
  std::vector<std::vector<Exps>> comps(j.rank());
  for (const auto& g : j.basis())
    for (std::size_t c = 0; c < g.rank(); ++c)
      if (!g[c].is_zero()) {
        const auto e = g[c].leading_monomial().exponents();
        comps[c].emplace_back(e.begin(), e.end());
      }
  AssSet out;
  for (const auto& gens : comps) {
    if (gens.empty()) {
      out.push_back(PrimeIdeal::zero(ctx));
      continue;
    }
    if (std::any_of(gens.begin(), gens.end(), [&](const Exps& e) {
          return std::all_of(e.begin(), e.end(), [](std::uint32_t v) { return v == 0; });
        }))
      continue;
    for (std::uint64_t mask : ideal_ass(gens)) out.push_back(PrimeIdeal::monomial(ctx, mask));
  }
  return canonical(std::move(out));
}

AssSet ass_univariate(const RingContext& ctx, const ModulePresentation& m) {
  if (ctx.flavor != Flavor::Univariate) throw UnsupportedFlavor("ass_univariate needs the univariate engine");
  require_same_ring(ctx.ring, m.ring);
  const SmithInvariants inv = smith_invariants(m);
  AssSet out;
  if (inv.free_rank > 0) out.push_back(PrimeIdeal::zero(ctx));
  if (!inv.invariants.empty())
    for (const auto& f : factor(inv.invariants.back())) out.push_back(PrimeIdeal::univariate(ctx, f.factor));
  return canonical(std::move(out));
}

bool ass_membership(const PrimeIdeal& p, const Submodule& j) {
  const Submodule c = contract(j, p);
  if (p.is_zero()) return !c.is_full();
  return !(quotient(c, p.generators()) == c);
}

AssSet ass_by_membership(const RingContext& ctx, const Submodule& j) {
  if (ctx.flavor != Flavor::Monomial) throw UnsupportedFlavor("ass_by_membership needs the monomial engine");
  AssSet out;
  for (const auto& p : all_monomial_primes(ctx))
    if (ass_membership(p, j)) out.push_back(p);
  return canonical(std::move(out));
}

AssSet ass(const RingContext& ctx, const Submodule& j) {
  switch (ctx.flavor) {
    case Flavor::Monomial:
      return j.is_monomial() ? ass_monomial(ctx, j) : ass_by_membership(ctx, j);
    case Flavor::Univariate: return ass_univariate(ctx, ModulePresentation::quotient(j));
    case Flavor::Finite: break;
  }
  throw UnsupportedFlavor("finite-ring Ass goes through the finite-ring engine");
}

}  // namespace germs
