#include "germs/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "germs/error.hpp"

namespace germs {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Monomial: return "monomial";
    case Flavor::Univariate: return "univariate";
    case Flavor::Finite: return "finite";
  }
  return "?";
}

RingContext RingContext::monomial(RingPtr ring, bool local) {
  if (ring->nvars() > 63) throw PreconditionError("monomial engine supports at most 63 variables");
  return {std::move(ring), Flavor::Monomial, local};
}

RingContext RingContext::univariate(RingPtr ring) {
  if (ring->nvars() != 1) throw PreconditionError("univariate engine needs exactly one variable");
  return {std::move(ring), Flavor::Univariate, false};
}

bool operator==(const RingContext& a, const RingContext& b) {
  return a.flavor == b.flavor && a.local == b.local && same_ring(a.ring, b.ring);
}

PrimeIdeal PrimeIdeal::zero(const RingContext& ctx) {
  PrimeIdeal p;
  p.ctx_ = ctx;
  p.kind_ = Kind::Zero;
  p.poly_ = UPoly(ctx.ring->field());
  return p;
}

PrimeIdeal PrimeIdeal::monomial(const RingContext& ctx, std::uint64_t mask) {
  if (ctx.flavor != Flavor::Monomial)
    throw UnsupportedFlavor("monomial prime in a " + flavor_name(ctx.flavor) + " context");
  if (mask >> ctx.ring->nvars()) throw PreconditionError("prime mentions unknown variables");
  PrimeIdeal p = zero(ctx);
  if (mask) {
    p.kind_ = Kind::Monomial;
    p.mask_ = mask;
  }
  return p;
}

PrimeIdeal PrimeIdeal::monomial(const RingContext& ctx, const std::vector<std::string>& vars) {
  std::uint64_t mask = 0;
  for (const auto& v : vars) {
    auto i = ctx.ring->index_of(v);
    if (!i) throw PreconditionError("unknown variable '" + v + "' in prime");
    mask |= std::uint64_t{1} << *i;
  }
  return monomial(ctx, mask);
}

PrimeIdeal PrimeIdeal::univariate(const RingContext& ctx, const UPoly& f) {
  if (ctx.flavor != Flavor::Univariate)
    throw UnsupportedFlavor("univariate prime in a " + flavor_name(ctx.flavor) + " context");
  if (!(f.field() == ctx.ring->field())) throw RingMismatch("prime generator over a different field");
  if (f.is_zero()) return zero(ctx);
  if (!is_irreducible(f))
    throw PreconditionError("(" + f.to_string(ctx.ring->variables()[0]) + ") is not a prime ideal");
  PrimeIdeal p = zero(ctx);
  p.kind_ = Kind::Univariate;
  p.poly_ = f.monic();
  return p;
}

bool PrimeIdeal::is_maximal() const {
  switch (kind_) {
    case Kind::Zero: return ctx_.ring->nvars() == 0;
    case Kind::Monomial: return mask_ == (std::uint64_t{1} << ctx_.ring->nvars()) - 1;
    case Kind::Univariate: return true;
  }
  return false;
}

std::vector<Polynomial> PrimeIdeal::generators() const {
  std::vector<Polynomial> out;
  if (kind_ == Kind::Monomial) {
    for (std::size_t i = 0; i < ctx_.ring->nvars(); ++i)
      if (mask_ >> i & 1) out.push_back(Polynomial::variable(ctx_.ring, i));
  } else if (kind_ == Kind::Univariate) {
    out.push_back(poly_.to_polynomial(ctx_.ring));
  }
  return out;
}

bool PrimeIdeal::contains(const Polynomial& f) const {
  require_same_ring(ctx_.ring, f.ring());
  switch (kind_) {
    case Kind::Zero: return f.is_zero();
    case Kind::Monomial:
      for (const auto& t : f.terms()) {
        bool hit = false;
        for (std::size_t i = 0; i < t.monomial.size() && !hit; ++i)
          hit = (mask_ >> i & 1) && t.monomial[i] > 0;
        if (!hit) return false;
      }
      return true;
    case Kind::Univariate: return (UPoly::from_polynomial(f) % poly_).is_zero();
  }
  return false;
}

std::string PrimeIdeal::to_string() const {
  if (kind_ == Kind::Zero) return "(0)";
  std::string s = "(";
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
  return s + ")";
}

bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
  return a.kind_ == b.kind_ && a.mask_ == b.mask_ && a.poly_ == b.poly_ && a.ctx_ == b.ctx_;
}

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
  if (a.kind_ == PrimeIdeal::Kind::Zero || b.kind_ == PrimeIdeal::Kind::Zero)
    return a.kind_ == PrimeIdeal::Kind::Zero && b.kind_ != PrimeIdeal::Kind::Zero;
  if (a.kind_ == PrimeIdeal::Kind::Univariate) return upoly_less(a.poly_, b.poly_);
  const int ca = std::popcount(a.mask_), cb = std::popcount(b.mask_);
  if (ca != cb) return ca < cb;
  // Lexicographic on the sorted variable index lists.
  for (std::size_t i = 0; i < 64; ++i) {
    const bool x = a.mask_ >> i & 1, y = b.mask_ >> i & 1;
    if (x != y) return x;
  }
  return false;
}

bool specializes(const PrimeIdeal& p, const PrimeIdeal& q) {
  if (!(p.context() == q.context())) throw RingMismatch("primes from different contexts");
  if (p.is_zero()) return true;
  if (p.kind() == PrimeIdeal::Kind::Monomial) return (p.mask() & ~q.mask()) == 0;
  return p == q;
}

std::vector<PrimeIdeal> all_monomial_primes(const RingContext& ctx) {
  std::vector<PrimeIdeal> out;
  const std::uint64_t n = ctx.ring->nvars();
  if (n > 20) throw LimitExceeded("too many variables to enumerate monomial primes");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(PrimeIdeal::monomial(ctx, m));
  std::sort(out.begin(), out.end());
  return out;
}

Submodule LocalizedSubmodule::span() const {
  return Submodule(prime.context().ring, rank, generators);
}

std::string LocalizedSubmodule::to_string() const { return span().to_string() + " at " + prime.to_string(); }

bool is_multigraded(const Submodule& s) {
  const std::size_t n = s.ring()->nvars();
  // Weighted union-find: shift[i] = d_i - d_parent(i).
  std::vector<std::size_t> parent(s.rank());
  std::vector<std::vector<long long>> shift(s.rank(), std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    std::vector<long long> acc(n, 0);
    while (parent[i] != i) {
      for (std::size_t k = 0; k < n; ++k) acc[k] += shift[i][k];
      i = parent[i];
    }
    return std::make_pair(i, acc);
  };
  for (const auto& g : s.basis()) {
    std::optional<std::size_t> first;
    for (std::size_t c = 0; c < g.rank(); ++c) {
      if (g[c].is_zero()) continue;
      if (g[c].size() > 1) return false;
      if (!first) {
        first = c;
        continue;
      }
      // Need d_c - d_first = m_first - m_c.
      const Monomial& mf = g[*first].leading_monomial();
      const Monomial& mc = g[c].leading_monomial();
      std::vector<long long> want(n);
      for (std::size_t k = 0; k < n; ++k)
        want[k] = static_cast<long long>(mf[k]) - static_cast<long long>(mc[k]);
      auto [rf, af] = find(*first);
      auto [rc, ac] = find(c);
      // d_c = d_rc + ac, d_first = d_rf + af.
      if (rf == rc) {
        for (std::size_t k = 0; k < n; ++k)
          if (ac[k] - af[k] != want[k]) return false;
      } else {
        // Attach rc under rf: d_rc - d_rf = want + af - ac.
        parent[rc] = rf;
        for (std::size_t k = 0; k < n; ++k) shift[rc][k] = want[k] + af[k] - ac[k];
      }
    }
  }
  return true;
}

Polynomial univariate_separator(const Submodule& s, const PrimeIdeal& p) {
  const RingPtr& ring = s.ring();
  const SmithInvariants inv = smith_invariants(ModulePresentation::quotient(s));
  if (inv.invariants.empty()) return Polynomial::constant(ring, 1);
  UPoly h = inv.invariants.back();
  if (!p.is_zero()) {
    for (;;) {
      auto [q, r] = h.divmod(p.poly());
      if (!r.is_zero()) break;
      h = q;
    }
  }
  return h.monic().to_polynomial(ring);
}

Submodule contract(const Submodule& s, const PrimeIdeal& p) {
  const RingContext& ctx = p.context();
  require_same_ring(ctx.ring, s.ring());
  switch (ctx.flavor) {
    case Flavor::Monomial: {
      if (!is_multigraded(s))
        throw UnsupportedFlavor("monomial engine localizes only multigraded submodules; " + s.to_string() +
                                " is not");
      Polynomial u = Polynomial::constant(ctx.ring, 1);
      for (std::size_t i = 0; i < ctx.ring->nvars(); ++i)
        if (!(p.mask() >> i & 1)) u = u * Polynomial::variable(ctx.ring, i);
      if (u.is_constant()) return s;
      return saturate(s, u).module;
    }
    case Flavor::Univariate: {
      const Polynomial h = univariate_separator(s, p);
      if (h.is_constant()) return s;
      return saturate(s, h).module;
    }
    case Flavor::Finite: break;
  }
  throw UnsupportedFlavor("contraction over a finite ring goes through the finite-ring engine");
}

Submodule contract(const LocalizedSubmodule& jp) { return contract(jp.span(), jp.prime); }

LocalizedSubmodule localize(const Submodule& s, const PrimeIdeal& p) {
  return {p, s.rank(), contract(s, p).basis()};
}

LocalizedSubmodule localize_down(const LocalizedSubmodule& jq, const PrimeIdeal& p) {
  if (!specializes(p, jq.prime))
    throw PreconditionError(p.to_string() + " is not contained in " + jq.prime.to_string());
  return localize(contract(jq), p);
}

bool stalk_equal(const LocalizedSubmodule& a, const LocalizedSubmodule& b) {
  if (!(a.prime == b.prime)) throw PreconditionError("stalks at different primes");
  if (a.rank != b.rank) throw RankMismatch("stalks of different rank");
  return contract(a) == contract(b);
}

Submodule kernel_of_localization(const ModulePresentation& m, const PrimeIdeal& p) {
  return contract(m.relations, p);
}

}  // namespace germs
