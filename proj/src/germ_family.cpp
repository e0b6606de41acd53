#include "germs/germ_family.hpp"

#include <bit>

#include "germs/error.hpp"
#include "germs/parallel.hpp"

namespace germs {

GenericRule GenericRule::from_submodule(Submodule g) {
  GenericRule r;
  r.kind = Kind::FromSubmodule;
  r.submodule = std::move(g);
  return r;
}

GenericRule GenericRule::full() { return GenericRule{}; }

GenericRule GenericRule::maximal_ideal_pattern() {
  GenericRule r;
  r.kind = Kind::MaximalIdealPattern;
  return r;
}

GenericRule GenericRule::unsupported(std::string name) {
  GenericRule r;
  r.kind = Kind::Unsupported;
  r.name = std::move(name);
  return r;
}

std::string GenericRule::describe() const {
  switch (kind) {
    case Kind::FromSubmodule: return "from-submodule " + submodule.to_string();
    case Kind::FullStalk: return "full";
    case Kind::MaximalIdealPattern: return "maximal-ideal pattern";
    case Kind::Unsupported: return "unsupported pattern '" + name + "'";
  }
  return "?";
}

GermFamily::GermFamily(RingContext ctx, std::size_t r, std::vector<LocalizedSubmodule> es, GenericRule g)
    : context(std::move(ctx)), rank(r), entries(std::move(es)), generic(std::move(g)) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!(e.prime.context() == context)) throw RingMismatch("entry prime from another ring context");
    if (e.rank != rank)
      throw RankMismatch("entry at " + e.prime.to_string() + " has rank " + std::to_string(e.rank) +
                         ", family rank is " + std::to_string(rank));
    for (const auto& g : e.generators) {
      require_same_ring(context.ring, g.ring());
      if (g.rank() != rank) throw RankMismatch("stalk generator of wrong rank at " + e.prime.to_string());
    }
    for (std::size_t j = 0; j < i; ++j)
      if (entries[j].prime == e.prime) throw PreconditionError("prime " + e.prime.to_string() + " listed twice");
  }
  if (generic.kind == GenericRule::Kind::FromSubmodule) {
    require_same_ring(context.ring, generic.submodule.ring());
    if (generic.submodule.rank() != rank) throw RankMismatch("generic submodule has the wrong rank");
  }
}

const LocalizedSubmodule* GermFamily::explicit_at(const PrimeIdeal& p) const {
  for (const auto& e : entries)
    if (e.prime == p) return &e;
  return nullptr;
}

namespace {

Submodule prime_times_full(const PrimeIdeal& p, std::size_t rank) {
  const RingPtr& ring = p.context().ring;
  std::vector<ModuleElement> gens;
  for (std::size_t c = 0; c < rank; ++c)
    for (const auto& g : p.generators()) gens.push_back(ModuleElement::basis(ring, rank, c).scaled(g));
  return Submodule(ring, rank, std::move(gens));
}

// Over a local monomial context the pattern has a single maximal prime and
// agrees with the submodule m*E everywhere.
GenericRule effective_rule(const GermFamily& fam) {
  if (fam.generic.kind == GenericRule::Kind::MaximalIdealPattern && fam.context.flavor == Flavor::Monomial &&
      fam.context.local) {
    const std::uint64_t all = (std::uint64_t{1} << fam.context.ring->nvars()) - 1;
    return GenericRule::from_submodule(prime_times_full(PrimeIdeal::monomial(fam.context, all), fam.rank));
  }
  return fam.generic;
}

LocalizedSubmodule generic_stalk(const GermFamily& fam, const GenericRule& rule, const PrimeIdeal& p) {
  const RingPtr& ring = fam.context.ring;
  switch (rule.kind) {
    case GenericRule::Kind::FromSubmodule: return localize(rule.submodule, p);
    case GenericRule::Kind::FullStalk: return {p, fam.rank, Submodule::full(ring, fam.rank).generators()};
    case GenericRule::Kind::MaximalIdealPattern:
      if (p.is_maximal()) return {p, fam.rank, prime_times_full(p, fam.rank).generators()};
      return {p, fam.rank, Submodule::full(ring, fam.rank).generators()};
    case GenericRule::Kind::Unsupported: break;
  }
  throw PreconditionError("generic rule " + rule.describe() + " does not determine the stalk at " + p.to_string());
}

// A node of the finite specialization poset used by the consistency check.
struct Node {
  std::string label;
  bool is_explicit = false;
  // False for unlisted primes under an unsupported rule.
  bool determined = true;
  // Prime at which this node's value is contracted (the skeleton prime for
  // generic nodes).
  PrimeIdeal level;
  // Contraction of J at `level`.
  Submodule value;
};

struct Pair {
  std::size_t small, large;
};

std::string skeleton_label(const PrimeIdeal& t) {
  return "generic non-monomial prime over " + t.to_string();
}

}  // namespace

LocalizedSubmodule stalk_at(const GermFamily& fam, const PrimeIdeal& p) {
  if (!(p.context() == fam.context)) throw RingMismatch("prime from another ring context");
  if (const auto* e = fam.explicit_at(p)) return *e;
  return generic_stalk(fam, effective_rule(fam), p);
}

ConsistencyReport check_consistency(const GermFamily& fam, unsigned jobs) {
  const RingContext& ctx = fam.context;
  const RingPtr& ring = ctx.ring;
  const GenericRule rule = effective_rule(fam);
  const Submodule full = Submodule::full(ring, fam.rank);
  std::vector<Node> nodes;
  std::vector<Pair> pairs;

  auto real_node = [&](const PrimeIdeal& p) {
    Node n;
    n.label = p.to_string();
    n.is_explicit = fam.explicit_at(p) != nullptr;
    n.level = p;
    n.determined = n.is_explicit || rule.kind != GenericRule::Kind::Unsupported;
    if (n.determined) n.value = contract(stalk_at(fam, p));
    return n;
  };
  // Value of generic nodes, already contracted at their level.
  auto generic_value = [&](const PrimeIdeal& level) {
    if (rule.kind == GenericRule::Kind::FromSubmodule) return contract(rule.submodule, level);
    return full;
  };

  if (ctx.flavor == Flavor::Monomial) {
    const std::size_t n = ring->nvars();
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const auto primes = all_monomial_primes(ctx);
    bool any_explicit = false;
    for (const auto& p : primes) any_explicit = any_explicit || fam.explicit_at(p);
    if (!any_explicit) return {};
    std::vector<std::size_t> real(all + 1);
    for (const auto& p : primes) {
      real[p.mask()] = nodes.size();
      nodes.push_back(real_node(p));
    }
    // Non-monomial primes P with skeleton T = {i : x_i ∈ P} exist when at
    // least one variable (two, over the local ring) stays outside T.
    const int free_needed = ctx.local ? 2 : 1;
    std::vector<std::size_t> virt(all + 1, SIZE_MAX);
    for (std::uint64_t t = 0; t <= all; ++t) {
      if (std::popcount(all & ~t) < free_needed) continue;
      const PrimeIdeal level = PrimeIdeal::monomial(ctx, t);
      bool needed = false;
      for (const auto& p : primes) {
        if (!fam.explicit_at(p)) continue;
        const std::uint64_t m = p.mask();
        if ((m & ~t) == 0) needed = true;
        if ((t & ~m) == 0 && std::popcount(m & ~t) >= 2) needed = true;
      }
      if (!needed || rule.kind == GenericRule::Kind::Unsupported) continue;
      virt[t] = nodes.size();
      nodes.push_back({skeleton_label(level), false, true, level, generic_value(level)});
    }
    for (const auto& a : primes)
      for (const auto& b : primes) {
        if (a == b || !specializes(a, b)) continue;
        const Node& na = nodes[real[a.mask()]];
        const Node& nb = nodes[real[b.mask()]];
        if ((na.is_explicit || nb.is_explicit) && na.determined && nb.determined)
          pairs.push_back({real[a.mask()], real[b.mask()]});
      }
    for (std::uint64_t t = 0; t <= all; ++t) {
      if (virt[t] == SIZE_MAX) continue;
      for (const auto& p : primes) {
        if (!fam.explicit_at(p)) continue;
        const std::uint64_t m = p.mask();
        if ((m & ~t) == 0) pairs.push_back({real[m], virt[t]});
        if ((t & ~m) == 0 && std::popcount(m & ~t) >= 2) pairs.push_back({virt[t], real[m]});
      }
    }
  } else if (ctx.flavor == Flavor::Univariate) {
    const PrimeIdeal zero = PrimeIdeal::zero(ctx);
    const bool zero_explicit = fam.explicit_at(zero) != nullptr;
    nodes.push_back(real_node(zero));
    for (const auto& e : fam.entries) {
      if (e.prime.is_zero()) continue;
      if (nodes[0].determined) pairs.push_back({0, nodes.size()});
      nodes.push_back(real_node(e.prime));
    }
    if (zero_explicit && rule.kind != GenericRule::Kind::Unsupported) {
      pairs.push_back({0, nodes.size()});
      // Only the localization at (0) of the generic maximal stalk matters.
      nodes.push_back({"generic maximal prime", false, true, zero, generic_value(zero)});
    }
  } else {
    throw UnsupportedFlavor("finite-ring families are checked by the finite-ring engine");
  }

  const auto results = parallel_map<std::optional<Violation>>(
      pairs.size(), jobs, [&](std::size_t k) -> std::optional<Violation> {
        const Node& s = nodes[pairs[k].small];
        const Node& l = nodes[pairs[k].large];
        const Submodule down = contract(l.value, s.level);
        if (down == s.value) return std::nullopt;
        return Violation{s.label, l.label, s.value.to_string(), down.to_string()};
      });
  ConsistencyReport report;
  report.pairs_checked = pairs.size();
  for (const auto& r : results)
    if (r) report.violations.push_back(*r);
  report.pass = report.violations.empty();
  return report;
}

std::string verdict_name(FinitenessReport::Verdict v) {
  switch (v) {
    case FinitenessReport::Verdict::Finite: return "finite";
    case FinitenessReport::Verdict::Infinite: return "infinite";
    case FinitenessReport::Verdict::Undecided: return "undecided";
  }
  return "?";
}

FinitenessReport check_finiteness(const GermFamily& fam, unsigned jobs) {
  const ConsistencyReport consistency = check_consistency(fam, jobs);
  if (!consistency.pass)
    throw Inconsistent("family is inconsistent at " + consistency.violations.front().smaller + " ⊂ " +
                            consistency.violations.front().larger);
  const GenericRule rule = effective_rule(fam);
  FinitenessReport report;
  if (fam.rank > 0 && rule.kind == GenericRule::Kind::MaximalIdealPattern) {
    report.verdict = FinitenessReport::Verdict::Infinite;
    report.witness =
        "every maximal prime m carries J(m) = m*E_m, so m*A_m is associated to E_m/J(m) for infinitely many m";
    return report;
  }
  if (rule.kind == GenericRule::Kind::Unsupported) {
    report.verdict = FinitenessReport::Verdict::Undecided;
    report.witness = "generic rule " + rule.describe() + " is outside the supported shapes";
    return report;
  }
  const auto member = parallel_map<char>(fam.entries.size(), jobs, [&](std::size_t i) -> char {
    return ass_membership(fam.entries[i].prime, fam.entries[i].span()) ? 1 : 0;
  });
  AssSet out;
  for (std::size_t i = 0; i < fam.entries.size(); ++i)
    if (member[i]) out.push_back(fam.entries[i].prime);
  if (rule.kind == GenericRule::Kind::FromSubmodule)
    for (const auto& p : ass(fam.context, rule.submodule))
      if (!fam.explicit_at(p)) out.push_back(p);
  report.primes = canonical(std::move(out));
  return report;
}

}  // namespace germs
