#include "germs/sections_glue.hpp"

#include "germs/error.hpp"
#include "germs/parallel.hpp"

namespace germs {

bool OpenSetDescription::contains(const PrimeIdeal& p) const {
  if (p.contains(denominator)) return false;
  for (const auto& r : removed)
    if (specializes(r, p)) return false;
  return true;
}

std::string OpenSetDescription::to_string() const {
  std::string s = "X";
  if (!denominator.is_constant()) s += " - Z(" + denominator.to_string() + ")";
  for (const auto& r : removed) s += " - Z" + r.to_string();
  return s;
}

bool germ_matches(const ModulePresentation& m, const Germ& g, const ModuleElement& v) {
  const Submodule k = kernel_of_localization(m, g.prime);
  return k.contains(v.scaled(g.denominator) - g.numerator);
}

namespace {

void validate(const GermSectionFamily& fam) {
  const ModulePresentation& m = fam.module;
  require_same_ring(fam.context.ring, m.ring);
  for (std::size_t i = 0; i < fam.germs.size(); ++i) {
    const Germ& g = fam.germs[i];
    if (!(g.prime.context() == fam.context)) throw RingMismatch("germ prime from another ring context");
    if (g.numerator.rank() != m.generators)
      throw RankMismatch("germ at " + g.prime.to_string() + " has rank " + std::to_string(g.numerator.rank()) +
                         ", module has " + std::to_string(m.generators) + " generators");
    require_same_ring(m.ring, g.numerator.ring());
    require_same_ring(m.ring, g.denominator.ring());
    if (g.prime.contains(g.denominator))
      throw PreconditionError("denominator " + g.denominator.to_string() + " lies in " + g.prime.to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (fam.germs[j].prime == g.prime) throw PreconditionError("two germs at " + g.prime.to_string());
  }
}

}  // namespace

GlueResult glue_section(const GermSectionFamily& fam, unsigned jobs) {
  validate(fam);
  const ModulePresentation& m = fam.module;
  const RingPtr& ring = m.ring;
  const std::size_t g = m.generators;

  const AssSet ass_m = ass(fam.context, m.relations);
  for (const auto& p : ass_m) {
    bool found = false;
    for (const auto& s : fam.germs) found = found || s.prime == p;
    if (!found) throw PreconditionError("germs must cover Ass(M); " + p.to_string() + " is missing");
  }

  const std::vector<Submodule> kernels = parallel_map<Submodule>(fam.germs.size(), jobs, [&](std::size_t i) {
    return kernel_of_localization(m, fam.germs[i].prime);
  });

  for (std::size_t i = 0; i < fam.germs.size(); ++i)
    for (std::size_t j = 0; j < fam.germs.size(); ++j) {
      const Germ& p = fam.germs[i];
      const Germ& q = fam.germs[j];
      if (i == j || !specializes(p.prime, q.prime)) continue;
      const ModuleElement d = p.numerator.scaled(q.denominator) - q.numerator.scaled(p.denominator);
      if (!kernels[i].contains(d))
        throw Inconsistent("germs at " + p.prime.to_string() + " and " + q.prime.to_string() + " disagree");
    }

  GlueResult res;
  for (const auto& s : fam.germs) {
    OpenSetDescription u{s.prime, s.denominator, {}};
    for (const auto& r : ass_m)
      if (!specializes(r, s.prime)) u.removed.push_back(r);
    res.opens.push_back(std::move(u));
  }

  // (v, s) with t_i v - s w_i ∈ K_i for every germ; a solution with s = 1 is the section.
  const std::vector<Submodule> conditions = parallel_map<Submodule>(fam.germs.size(), jobs, [&](std::size_t i) {
    const Germ& s = fam.germs[i];
    Matrix c(ring, g, g + 1);
    for (std::size_t k = 0; k < g; ++k) {
      c(k, k) = s.denominator;
      c(k, g) = -s.numerator[k];
    }
    return preimage(c, kernels[i]);
  });
  Submodule sol = Submodule::full(ring, g + 1);
  for (const auto& c : conditions) sol = sol.is_full() ? c : intersect(sol, c);

  std::vector<Polynomial> last;
  for (const auto& b : sol.basis()) last.push_back(b[g]);
  const auto coeffs = lift(ModuleElement(Polynomial::constant(ring, 1)), Submodule::ideal(ring, last));
  if (!coeffs) {
    res.reason = "no element of M restricts to these germs";
    return res;
  }
  ModuleElement v(ring, g);
  for (std::size_t j = 0; j < last.size(); ++j)
    for (std::size_t k = 0; k < g; ++k) v[k] = v[k] + (*coeffs)[j] * sol.basis()[j][k];
  res.section = m.relations.normal_form(v);
  res.exists = true;

  for (std::size_t i = 0; i < fam.germs.size(); ++i)
    if (!kernels[i].contains(res.section.scaled(fam.germs[i].denominator) - fam.germs[i].numerator))
      throw Error("internal soundness alarm: glued section misses the germ at " + fam.germs[i].prime.to_string());
  Submodule common = Submodule::full(ring, g);
  for (const auto& k : kernels) common = common.is_full() ? k : intersect(common, k);
  if (!(common == m.relations))
    throw Error("internal soundness alarm: localization kernels at the germ primes meet in " + common.to_string() +
                ", not in the relations " + m.relations.to_string());
  return res;
}

InjectivityReport phi_injectivity(const RingContext& ctx, const ModulePresentation& m, const PrimeIdeal& c) {
  require_same_ring(ctx.ring, m.ring);
  InjectivityReport rep;
  for (const auto& p : ass(ctx, m.relations))
    if (specializes(p, c)) rep.primes.push_back(p);
  Submodule common = Submodule::full(m.ring, m.generators);
  for (const auto& p : rep.primes) {
    const Submodule k = kernel_of_localization(m, p);
    common = common.is_full() ? k : intersect(common, k);
  }
  const Submodule kc = kernel_of_localization(m, c);
  const Submodule down = contract(common, c);
  if (down == kc) return rep;
  rep.injective = false;
  for (const auto& b : down.basis())
    if (!kc.contains(b)) {
      rep.witness = b;
      break;
    }
  return rep;
}

ModulePresentation hom_from_free(const ModulePresentation& f, std::size_t a) {
  const std::size_t b = f.generators;
  std::vector<ModuleElement> rels;
  for (std::size_t j = 0; j < a; ++j)
    for (const auto& r : f.relations.basis()) {
      ModuleElement c(f.ring, a * b);
      for (std::size_t i = 0; i < b; ++i) c[j * b + i] = r[i];
      rels.push_back(std::move(c));
    }
  return ModulePresentation(f.ring, a * b, std::move(rels));
}

bool is_well_defined(const Matrix& phi, const ModulePresentation& e, const ModulePresentation& f) {
  if (phi.rows() != f.generators || phi.cols() != e.generators) throw RankMismatch("matrix has the wrong shape");
  for (const auto& r : e.relations.basis())
    if (!f.relations.contains(phi * r)) return false;
  return true;
}

bool same_map(const Matrix& phi, const Matrix& psi, const ModulePresentation& f) {
  if (phi.rows() != psi.rows() || phi.cols() != psi.cols()) throw RankMismatch("matrices of different shape");
  for (const auto& c : (phi - psi).columns())
    if (!f.relations.contains(c)) return false;
  return true;
}

std::optional<Matrix> glue_homomorphism(const RingContext& ctx, const ModulePresentation& e,
                                        const ModulePresentation& f, const std::vector<MapGerm>& germs,
                                        unsigned jobs) {
  require_same_ring(e.ring, f.ring);
  const std::size_t a = e.generators, b = f.generators;
  GermSectionFamily fam{ctx, hom_from_free(f, a), {}};
  for (const auto& g : germs) {
    if (g.numerator.rows() != b || g.numerator.cols() != a)
      throw RankMismatch("germ matrix at " + g.prime.to_string() + " is not " + std::to_string(b) + "x" +
                         std::to_string(a));
    const Submodule k = kernel_of_localization(f, g.prime);
    for (const auto& r : e.relations.basis())
      if (!k.contains(g.numerator * r))
        throw Inconsistent("germ matrix at " + g.prime.to_string() + " does not respect the relations");
    fam.germs.push_back({g.prime, g.numerator.vec(), g.denominator});
  }
  if (a == 0 || b == 0) return Matrix(e.ring, b, a);
  const GlueResult glued = glue_section(fam, jobs);
  if (!glued.exists) return std::nullopt;
  Matrix phi = Matrix::from_vec(glued.section, b, a);
  if (!is_well_defined(phi, e, f)) throw Error("internal soundness alarm: glued matrix is not a homomorphism");
  return phi;
}

}  // namespace germs
