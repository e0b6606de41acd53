#include "germs/finite_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "germs/error.hpp"
#include "germs/parallel.hpp"

namespace germs::finite {

namespace {

std::string f2_poly_name(unsigned bits) {
  if (bits == 0) return "0";
  std::string s;
  for (int i = 31; i >= 0; --i) {
    if (!(bits >> i & 1)) continue;
    if (!s.empty()) s += " + ";
    s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

// Additive closure of {a*g} inside a set of `size` elements.
template <class Add, class Mul>
Subset close(std::size_t size, unsigned scalars, const std::vector<std::size_t>& seed, Add add, Mul mul) {
  Subset in(size, false);
  std::vector<std::size_t> elems{0};
  in[0] = true;
  for (const auto u : seed)
    for (unsigned a = 0; a < scalars; ++a) {
      const std::size_t g = mul(a, u);
      if (in[g]) continue;
      bool changed = true;
      while (changed) {
        changed = false;
        const std::size_t cur = elems.size();
        for (std::size_t i = 0; i < cur; ++i) {
          const std::size_t v = add(elems[i], g);
          if (!in[v]) {
            in[v] = true;
            elems.push_back(v);
            changed = true;
          }
        }
      }
    }
  return in;
}

template <class Span>
std::vector<Subset> all_closed(std::size_t size, Span span) {
  std::set<Subset> seen;
  std::vector<Subset> queue{span(std::vector<std::size_t>{})};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t e = 0; e < size; ++e) {
      if (queue[k][e]) continue;
      std::vector<std::size_t> seed;
      for (std::size_t i = 0; i < size; ++i)
        if (queue[k][i]) seed.push_back(i);
      seed.push_back(e);
      Subset s = span(seed);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const Subset& a, const Subset& b) {
    const auto ca = std::count(a.begin(), a.end(), true), cb = std::count(b.begin(), b.end(), true);
    if (ca != cb) return ca < cb;
    return a > b;
  });
  return queue;
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

}  // namespace

FiniteRing::FiniteRing(std::string name, unsigned n, std::vector<unsigned> add, std::vector<unsigned> mul,
                       std::vector<std::string> names)
    : name_(std::move(name)), n_(n), add_(std::move(add)), mul_(std::move(mul)), names_(std::move(names)) {
  analyze();
}

FiniteRing FiniteRing::integers_mod(unsigned n) {
  if (n < 2 || n > 64) throw PreconditionError("Z/n oracle supports 2 <= n <= 64");
  std::vector<unsigned> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  }
  return FiniteRing("z" + std::to_string(n), n, add, mul, names);
}

FiniteRing FiniteRing::f2_truncated(unsigned k) {
  if (k < 1 || k > 6) throw PreconditionError("F_2[x]/(x^k) oracle supports 1 <= k <= 6");
  const unsigned n = 1u << k;
  std::vector<unsigned> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a) {
    names.push_back(f2_poly_name(a));
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = a ^ b;
      unsigned p = 0;
      for (unsigned i = 0; i < k; ++i)
        if (b >> i & 1) p ^= a << i;
      mul[a * n + b] = p & (n - 1);
    }
  }
  return FiniteRing("f2x_x" + std::to_string(k), n, add, mul, names);
}

FiniteRing FiniteRing::f2_square_zero() {
  // Bits: 1, x, y.
  const unsigned n = 8;
  std::vector<unsigned> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (unsigned a = 0; a < n; ++a) {
    std::string s;
    for (const auto& [bit, v] : std::vector<std::pair<unsigned, const char*>>{{2, "x"}, {4, "y"}, {1, "1"}})
      if (a & bit) s += (s.empty() ? "" : " + ") + std::string(v);
    names.push_back(s.empty() ? "0" : s);
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = a ^ b;
      const unsigned c0 = a & b & 1;
      const unsigned cx = ((a & 1) && (b & 2)) ^ ((a & 2) && (b & 1));
      const unsigned cy = ((a & 1) && (b & 4)) ^ ((a & 4) && (b & 1));
      mul[a * n + b] = c0 | cx << 1 | cy << 2;
    }
  }
  return FiniteRing("f2xy_m2", n, add, mul, names);
}

std::vector<std::string> FiniteRing::suite() { return {"f2", "f3", "z4", "z8", "z6", "f2x_x2", "f2xy_m2", "f2x_x3"}; }

FiniteRing FiniteRing::by_name(const std::string& name) {
  auto rename = [](FiniteRing r, std::string n) {
    r.name_ = std::move(n);
    return r;
  };
  if (name == "f2") return rename(integers_mod(2), "f2");
  if (name == "f3") return rename(integers_mod(3), "f3");
  if (name == "z4") return integers_mod(4);
  if (name == "z8") return integers_mod(8);
  if (name == "z6") return integers_mod(6);
  if (name == "f2x_x2") return f2_truncated(2);
  if (name == "f2x_x3") return f2_truncated(3);
  if (name == "f2xy_m2") return f2_square_zero();
  throw PreconditionError("unknown finite ring '" + name + "'");
}

void FiniteRing::analyze() {
  neg_.assign(n_, 0);
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b)
      if (add(a, b) == 0) neg_[a] = b;
  for (unsigned a = 0; a < n_; ++a) {
    bool is_one = true;
    for (unsigned b = 0; b < n_ && is_one; ++b) is_one = mul(a, b) == b;
    if (is_one) one_ = a;
  }
  for (unsigned a = 0; a < n_; ++a) {
    for (unsigned b = 0; b < n_; ++b)
      if (mul(a, b) == one_) {
        units_.push_back(a);
        break;
      }
    if (mul(a, a) == a) idempotents_.push_back(a);
  }
  ideals_ = all_closed(n_, [&](const std::vector<std::size_t>& seed) {
    return close(
        n_, n_, seed, [&](std::size_t u, std::size_t v) { return static_cast<std::size_t>(add(u, v)); },
        [&](unsigned a, std::size_t u) { return static_cast<std::size_t>(mul(a, u)); });
  });
  for (const auto& i : ideals_) {
    if (i[one_]) continue;
    bool prime = true;
    for (unsigned a = 0; a < n_ && prime; ++a)
      for (unsigned b = 0; b < n_ && prime; ++b)
        if (i[mul(a, b)] && !i[a] && !i[b]) prime = false;
    if (prime) primes_.push_back(i);
  }
  for (const auto& p : primes_) {
    unsigned e = one_;
    for (const auto f : idempotents_)
      if (!p[f]) e = mul(e, f);
    local_idem_.push_back(e);
  }
}

std::string FiniteRing::ideal_name(const Subset& ideal) const {
  std::vector<std::size_t> gens;
  Subset span(n_, false);
  span[0] = true;
  for (unsigned a = 1; a < n_; ++a) {
    if (!ideal[a] || span[a]) continue;
    gens.push_back(a);
    span = close(
        n_, n_, gens, [&](std::size_t u, std::size_t v) { return static_cast<std::size_t>(add(u, v)); },
        [&](unsigned s, std::size_t u) { return static_cast<std::size_t>(mul(s, u)); });
  }
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + names_[gens[i]];
  return s + ")";
}

bool FiniteRing::verify_axioms() const {
  for (unsigned a = 0; a < n_; ++a) {
    if (add(a, 0) != a || mul(a, one_) != a) return false;
    for (unsigned b = 0; b < n_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (unsigned c = 0; c < n_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
    if (add(a, neg_[a]) != 0) return false;
  }
  return true;
}

FreeModule::FreeModule(const FiniteRing& ring, unsigned rank, std::size_t bound) : ring_(&ring), rank_(rank) {
  size_ = 1;
  for (unsigned i = 0; i < rank; ++i) {
    size_ *= ring.size();
    if (size_ > bound)
      throw LimitExceeded("module of size above " + std::to_string(bound) + " exceeds the oracle bound");
  }
}

std::size_t FreeModule::add(std::size_t u, std::size_t v) const {
  const unsigned n = ring_->size();
  std::size_t out = 0, place = 1;
  for (unsigned i = 0; i < rank_; ++i, u /= n, v /= n, place *= n)
    out += place * ring_->add(static_cast<unsigned>(u % n), static_cast<unsigned>(v % n));
  return out;
}

std::size_t FreeModule::smul(unsigned a, std::size_t u) const {
  const unsigned n = ring_->size();
  std::size_t out = 0, place = 1;
  for (unsigned i = 0; i < rank_; ++i, u /= n, place *= n) out += place * ring_->mul(a, static_cast<unsigned>(u % n));
  return out;
}

std::string FreeModule::element_name(std::size_t u) const {
  const unsigned n = ring_->size();
  if (rank_ == 1) return ring_->element_name(static_cast<unsigned>(u));
  std::string s = "[";
  for (unsigned i = 0; i < rank_; ++i, u /= n) s += (i ? ", " : "") + ring_->element_name(static_cast<unsigned>(u % n));
  return s + "]";
}

Subset FreeModule::span(const Subset& seed) const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < seed.size(); ++i)
    if (seed[i]) s.push_back(i);
  return close(
      size_, ring_->size(), s, [&](std::size_t u, std::size_t v) { return add(u, v); },
      [&](unsigned a, std::size_t u) { return smul(a, u); });
}

Subset FreeModule::zero() const {
  Subset z(size_, false);
  z[0] = true;
  return z;
}

std::vector<Subset> enumerate_submodules(const FreeModule& e) {
  return all_closed(e.size(), [&](const std::vector<std::size_t>& seed) {
    Subset s(e.size(), false);
    for (const auto i : seed) s[i] = true;
    return e.span(s);
  });
}

bool subset_of(const Subset& a, const Subset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

Subset contract_by_definition(const FreeModule& e, const Subset& n, std::size_t prime) {
  const FiniteRing& a = e.ring();
  const Subset& p = a.primes().at(prime);
  Subset out(e.size(), false);
  for (std::size_t m = 0; m < e.size(); ++m)
    for (unsigned s = 0; s < a.size() && !out[m]; ++s)
      if (!p[s] && n[e.smul(s, m)]) out[m] = true;
  return out;
}

Subset contract_by_idempotent(const FreeModule& e, const Subset& n, std::size_t prime) {
  const unsigned idem = e.ring().local_idempotent(prime);
  Subset out(e.size(), false);
  for (std::size_t m = 0; m < e.size(); ++m) out[m] = n[e.smul(idem, m)];
  return out;
}

Subset annihilator(const FreeModule& e, const Subset& f, std::size_t m) {
  Subset out(e.ring().size(), false);
  for (unsigned a = 0; a < e.ring().size(); ++a) out[a] = f[e.smul(a, m)];
  return out;
}

std::vector<std::size_t> ass_finite(const FreeModule& e, const Subset& f) {
  const auto& primes = e.ring().primes();
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < e.size(); ++m) {
    if (f[m]) continue;
    const Subset ann = annihilator(e, f, m);
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (ann == primes[i]) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool maximal_is_associated(const FreeModule& e, const Subset& contraction, std::size_t prime) {
  const FiniteRing& a = e.ring();
  const Subset& p = a.primes().at(prime);
  for (std::size_t m = 0; m < e.size(); ++m) {
    if (contraction[m]) continue;
    const Subset ann = annihilator(e, contraction, m);
    // ann_{A_p}(m/1) = (ann m)_p; compare its contraction with p.
    Subset sat(a.size(), false);
    for (unsigned x = 0; x < a.size(); ++x)
      for (unsigned s = 0; s < a.size() && !sat[x]; ++s)
        if (!p[s] && ann[a.mul(s, x)]) sat[x] = true;
    if (sat == p) return true;
  }
  return false;
}

Subset reconstruct_finite(const FreeModule& e, const std::vector<Subset>& family) {
  Subset f = e.full();
  for (std::size_t i = 0; i < family.size(); ++i)
    if (maximal_is_associated(e, family[i], i)) f = intersect(f, family[i]);
  return f;
}

Subset reconstruct_local_finite(const FreeModule& e, const std::vector<Subset>& family) {
  if (e.ring().primes().size() != 1) throw PreconditionError(e.ring().name() + " is not local");
  return family.front();
}

namespace {

std::string submodule_name(const FreeModule& e, const Subset& s) {
  std::vector<std::size_t> gens;
  Subset span = e.zero();
  for (std::size_t m = 1; m < e.size(); ++m) {
    if (!s[m] || span[m]) continue;
    gens.push_back(m);
    Subset seed(e.size(), false);
    for (const auto g : gens) seed[g] = true;
    span = e.span(seed);
  }
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + e.element_name(gens[i]);
  return out + ")";
}

struct Setup {
  FreeModule e;
  std::vector<Subset> subs;
  /// Contractions per prime (by definition), indexed [sub][prime].
  std::vector<std::vector<Subset>> contractions;
  /// p-saturated submodules per prime.
  std::vector<std::vector<Subset>> saturated;
};

Setup prepare(const FiniteRing& a, unsigned rank, std::vector<std::string>& errors) {
  Setup s{FreeModule(a, rank), {}, {}, {}};
  s.subs = enumerate_submodules(s.e);
  const std::size_t np = a.primes().size();
  s.saturated.resize(np);
  for (const auto& n : s.subs) {
    std::vector<Subset> row;
    for (std::size_t p = 0; p < np; ++p) {
      row.push_back(contract_by_definition(s.e, n, p));
      if (!(row.back() == contract_by_idempotent(s.e, n, p)))
        errors.push_back("contraction routes disagree for " + submodule_name(s.e, n) + " at " +
                         a.ideal_name(a.primes()[p]));
      if (row.back() == n) s.saturated[p].push_back(n);
    }
    s.contractions.push_back(std::move(row));
  }
  return s;
}

std::string family_name(const FiniteRing& a, const FreeModule& e, const std::vector<Subset>& fam) {
  std::string s = "{";
  for (std::size_t p = 0; p < fam.size(); ++p)
    s += (p ? ", " : "") + a.ideal_name(a.primes()[p]) + ": " + submodule_name(e, fam[p]);
  return s + "}";
}

void record(OracleReport& rep, std::vector<std::string> errs) {
  rep.violations += errs.size();
  for (auto& e : errs)
    if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(std::move(e));
}

}  // namespace

OracleReport oracle_families(const FiniteRing& a, unsigned rank, unsigned jobs) {
  OracleReport rep;
  rep.ring = a.name();
  rep.rank = rank;
  std::vector<std::string> setup_errors;
  if (!a.verify_axioms()) setup_errors.push_back("ring tables violate the axioms");
  const Setup s = prepare(a, rank, setup_errors);
  record(rep, std::move(setup_errors));
  rep.submodules = s.subs.size();
  const std::size_t np = a.primes().size();

  std::size_t families = 1;
  for (const auto& sat : s.saturated) families *= sat.size();
  rep.families = families;

  const auto results = parallel_map<std::vector<std::string>>(families, jobs, [&](std::size_t code) {
    std::vector<std::string> errs;
    std::vector<Subset> fam;
    for (std::size_t p = 0; p < np; ++p) {
      fam.push_back(s.saturated[p][code % s.saturated[p].size()]);
      code /= s.saturated[p].size();
    }
    const std::string name = family_name(a, s.e, fam);
    bool consistent = true;
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t q = 0; q < np; ++q)
        if (p != q && subset_of(a.primes()[p], a.primes()[q]) && !(contract_by_definition(s.e, fam[q], p) == fam[p]))
          consistent = false;
    std::vector<std::size_t> big_a;
    for (std::size_t p = 0; p < np; ++p)
      if (maximal_is_associated(s.e, fam[p], p)) big_a.push_back(p);
    const bool finite = true;  // finitely many primes
    std::vector<std::size_t> found;
    for (std::size_t k = 0; k < s.subs.size(); ++k)
      if (s.contractions[k] == fam) found.push_back(k);
    if ((consistent && finite) != !found.empty())
      errs.push_back(name + ": conditions " + (consistent ? "hold" : "fail") + " but " +
                     std::to_string(found.size()) + " submodules realize the family");
    if (found.size() > 1) errs.push_back(name + ": realized by several submodules");
    if (!found.empty()) {
      const Subset& f = s.subs[found.front()];
      if (ass_finite(s.e, f) != big_a) errs.push_back(name + ": Ass(E/F) differs from the finiteness set");
      if (!(reconstruct_finite(s.e, fam) == f)) errs.push_back(name + ": intersection formula misses F");
      if (np == 1 && !(reconstruct_local_finite(s.e, fam) == f)) errs.push_back(name + ": local read-off misses F");
    }
    return errs;
  });
  for (const auto& r : results) record(rep, r);
  return rep;
}

OracleReport oracle_localization(const FiniteRing& a, unsigned rank, unsigned jobs) {
  OracleReport rep;
  rep.ring = a.name();
  rep.rank = rank;
  std::vector<std::string> setup_errors;
  const Setup s = prepare(a, rank, setup_errors);
  record(rep, std::move(setup_errors));
  rep.submodules = s.subs.size();
  rep.modules = s.subs.size();
  const std::size_t np = a.primes().size();
  std::vector<bool> maximal(np, true);
  for (std::size_t p = 0; p < np; ++p)
    for (const auto& i : a.ideals())
      if (!i[a.one()] && i != a.primes()[p] && subset_of(a.primes()[p], i)) maximal[p] = false;

  const auto results = parallel_map<std::vector<std::string>>(s.subs.size(), jobs, [&](std::size_t k) {
    std::vector<std::string> errs;
    const Subset& f = s.subs[k];
    const auto ass = ass_finite(s.e, f);
    Subset all = s.e.full(), max = s.e.full(), over_ass = s.e.full();
    for (std::size_t p = 0; p < np; ++p) {
      all = intersect(all, s.contractions[k][p]);
      if (maximal[p]) max = intersect(max, s.contractions[k][p]);
      if (std::binary_search(ass.begin(), ass.end(), p)) over_ass = intersect(over_ass, s.contractions[k][p]);
    }
    const std::string name = "E/" + submodule_name(s.e, f);
    if (!(all == f)) errs.push_back(name + ": kernels over Spec meet in " + submodule_name(s.e, all));
    if (!(max == f)) errs.push_back(name + ": kernels over Max meet in " + submodule_name(s.e, max));
    if (!(over_ass == f)) errs.push_back(name + ": kernels over Ass meet in " + submodule_name(s.e, over_ass));
    return errs;
  });
  for (const auto& r : results) record(rep, r);
  return rep;
}

}  // namespace germs::finite
