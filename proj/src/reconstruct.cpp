#include "germs/reconstruct.hpp"

#include <algorithm>

#include "germs/error.hpp"
#include "germs/parallel.hpp"

namespace germs {

std::pair<AssSet, AssSet> partition(const PrimeIdeal& q, const AssSet& primes) {
  std::pair<AssSet, AssSet> out;
  for (const auto& p : primes) (specializes(p, q) ? out.first : out.second).push_back(p);
  return out;
}

Polynomial separating_element(const PrimeIdeal& q, const AssSet& r) {
  Polynomial a = Polynomial::constant(q.context().ring, 1);
  std::vector<Polynomial> chosen;
  for (const auto& c : r) {
    std::optional<Polynomial> pick;
    for (const auto& g : c.generators())
      if (!q.contains(g)) {
        pick = g;
        break;
      }
    if (!pick) throw PreconditionError(c.to_string() + " is contained in " + q.to_string());
    if (std::find(chosen.begin(), chosen.end(), *pick) != chosen.end()) continue;
    chosen.push_back(*pick);
    a = a * *pick;
  }
  return a;
}

Saturation stalk_of_F_via_separator(const Submodule& f, const PrimeIdeal& q, const Polynomial& a) {
  if (q.contains(a)) throw PreconditionError("separating element " + a.to_string() + " lies in " + q.to_string());
  if (a.is_constant()) return {f, 0};
  return saturate(f, a);
}

namespace {

std::vector<PrimeIdeal> verification_primes(const GermFamily& fam, const AssSet& primes,
                                            const std::vector<PrimeIdeal>& extra) {
  std::vector<PrimeIdeal> out;
  auto add = [&](const PrimeIdeal& p) {
    if (!(p.context() == fam.context)) throw RingMismatch("verification prime from another ring context");
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (const auto& e : fam.entries) add(e.prime);
  for (const auto& p : primes) add(p);
  for (const auto& p : extra) add(p);
  if (fam.context.flavor == Flavor::Monomial && fam.context.ring->nvars() <= 6)
    for (const auto& p : all_monomial_primes(fam.context)) add(p);
  if (fam.context.flavor == Flavor::Univariate) add(PrimeIdeal::zero(fam.context));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ReconstructionResult reconstruct(const GermFamily& fam, const std::vector<PrimeIdeal>& verify_at, unsigned jobs) {
  const FinitenessReport fin = check_finiteness(fam, jobs);
  if (fin.verdict != FinitenessReport::Verdict::Finite)
    throw Inconsistent("finiteness condition is " + verdict_name(fin.verdict) + ": " + fin.witness);
  const RingPtr& ring = fam.context.ring;

  ReconstructionResult res;
  res.primes = fin.primes;
  res.contractions = parallel_map<Submodule>(res.primes.size(), jobs, [&](std::size_t i) {
    return groebner(contract(stalk_at(fam, res.primes[i])));
  });
  res.F = Submodule::full(ring, fam.rank);
  for (const auto& c : res.contractions) res.F = res.F.is_full() ? c : intersect(res.F, c);
  res.F = groebner(res.F);

  const auto primes = verification_primes(fam, res.primes, verify_at);
  res.table = parallel_map<VerificationRow>(primes.size(), jobs, [&](std::size_t i) {
    VerificationRow row;
    row.prime = primes[i];
    row.prescribed = contract(stalk_at(fam, row.prime));
    row.contracted = contract(res.F, row.prime);
    row.separator = separating_element(row.prime, partition(row.prime, res.primes).second);
    const Saturation sat = stalk_of_F_via_separator(res.F, row.prime, row.separator);
    row.exponent = sat.exponent;
    row.via_separator = contract(sat.module, row.prime);
    row.equal = row.prescribed == row.contracted && row.contracted == row.via_separator;
    return row;
  });

  res.ass_of_quotient = ass(fam.context, res.F);
  res.ass_matches = res.ass_of_quotient == res.primes;
  res.success = res.ass_matches;
  for (const auto& row : res.table)
    if (!row.equal) {
      res.success = false;
      if (res.alarm.empty())
        res.alarm = "stalk mismatch at " + row.prime.to_string() + ": prescribed " + row.prescribed.to_string() +
                    ", F gives " + row.contracted.to_string() + ", separator route gives " +
                    row.via_separator.to_string();
    }
  if (!res.ass_matches && res.alarm.empty())
    res.alarm = "Ass(E/F) = " + to_string(res.ass_of_quotient) + " differs from " + to_string(res.primes);
  return res;
}

Submodule reconstruct_local(const GermFamily& fam) {
  if (fam.context.flavor != Flavor::Monomial || !fam.context.local)
    throw PreconditionError("reconstruct_local needs a local context");
  const std::uint64_t all = (std::uint64_t{1} << fam.context.ring->nvars()) - 1;
  return groebner(contract(stalk_at(fam, PrimeIdeal::monomial(fam.context, all))));
}

}  // namespace germs
