#include <CLI11.hpp>
#include <yaml-cpp/yaml.h>

#include <sstream>

#include "germs/cli.hpp"
#include "germs/error.hpp"
#include "germs/finite_oracle.hpp"
#include "germs/loaders.hpp"
#include "germs/reconstruct.hpp"

namespace germs {

namespace {

// Text mode prints "Label: value" lines and free-form detail; machine mode
// prints key=value records only.
class Report {
 public:
  Report(std::ostream& os, bool machine) : os_(os), machine_(machine) {}

  bool machine() const { return machine_; }

  void field(const std::string& key, const std::string& label, const std::string& value) {
    if (machine_)
      os_ << key << '=' << value << '\n';
    else
      os_ << label << ": " << value << '\n';
  }
  void field(const std::string& key, const std::string& label, std::size_t value) {
    field(key, label, std::to_string(value));
  }
  void text(const std::string& line) {
    if (!machine_) os_ << line << '\n';
  }
  void record(const std::string& key, const std::string& value) {
    if (machine_) os_ << key << '=' << value << '\n';
  }
  std::ostream& raw() { return os_; }

 private:
  std::ostream& os_;
  bool machine_;
};

struct Options {
  std::string format = "text";
  std::string order;
  unsigned jobs = 1;
};

// Set from --order; replaces the order given in the file.
std::string order_override;

text::Value load_file(const std::string& path) {
  text::Value root = text::load(path);
  if (order_override.empty()) return root;
  for (auto& [k, v] : root.fields)
    if (k == "ring" && v.kind == text::Value::Kind::Table) {
      text::Value o;
      o.kind = text::Value::Kind::String;
      o.str = order_override;
      bool replaced = false;
      for (auto& [rk, rv] : v.fields)
        if (rk == "order") {
          rv = o;
          replaced = true;
        }
      if (!replaced) v.fields.emplace_back("order", o);
    }
  return root;
}

// Loader errors carry the position inside the file but not its name.
template <class F>
auto with_source(const std::string& path, F&& f) {
  try {
    return f(load_file(path));
  } catch (const ParseError& e) {
    if (!e.source().empty()) throw;
    throw ParseError(e.message(), e.line(), e.column(), path);
  }
}

void emit_poly(YAML::Emitter& y, const Polynomial& f) { y << YAML::DoubleQuoted << f.to_string(); }

void emit_element(YAML::Emitter& y, const ModuleElement& v) {
  if (v.rank() == 1) return emit_poly(y, v[0]);
  y << YAML::Flow << YAML::BeginSeq;
  for (std::size_t i = 0; i < v.rank(); ++i) emit_poly(y, v[i]);
  y << YAML::EndSeq;
}

void emit_prime(YAML::Emitter& y, const PrimeIdeal& p) {
  y << YAML::Flow << YAML::BeginMap;
  switch (p.kind()) {
    case PrimeIdeal::Kind::Zero: y << YAML::Key << "zero" << YAML::Value << true; break;
    case PrimeIdeal::Kind::Univariate:
      y << YAML::Key << "poly" << YAML::Value;
      emit_poly(y, p.generators()[0]);
      break;
    case PrimeIdeal::Kind::Monomial: {
      y << YAML::Key << "vars" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      const auto& vars = p.context().ring->variables();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (p.mask() >> i & 1) y << vars[i];
      y << YAML::EndSeq;
      break;
    }
  }
  y << YAML::EndMap;
}

void emit_matrix(YAML::Emitter& y, const Matrix& m) {
  y << YAML::Flow << YAML::BeginSeq;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    y << YAML::Flow << YAML::BeginSeq;
    for (std::size_t j = 0; j < m.cols(); ++j) emit_poly(y, m(i, j));
    y << YAML::EndSeq;
  }
  y << YAML::EndSeq;
}

void emit_ring(YAML::Emitter& y, const RingContext& ctx) {
  y << YAML::Key << "ring" << YAML::Value << YAML::BeginMap;
  y << YAML::Key << "vars" << YAML::Value << YAML::Flow << ctx.ring->variables();
  y << YAML::Key << "field" << YAML::Value << ctx.ring->field().name();
  y << YAML::Key << "engine" << YAML::Value << flavor_name(ctx.flavor);
  if (ctx.local) y << YAML::Key << "local" << YAML::Value << true;
  y << YAML::EndMap;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// --- check -----------------------------------------------------------------

int cmd_check(const Options& opt, Report& rep, const std::string& path) {
  const GermFamily fam = with_source(path, io::load_family);
  const ConsistencyReport cons = check_consistency(fam, opt.jobs);
  rep.field("generic", "Generic rule", fam.generic.describe());
  rep.field("pairs_checked", "Pairs checked", cons.pairs_checked);
  rep.field("consistency", "Consistency", cons.pass ? "pass" : "fail");
  for (std::size_t i = 0; i < cons.violations.size(); ++i) {
    const Violation& v = cons.violations[i];
    const std::string k = "violation." + std::to_string(i) + ".";
    rep.record(k + "smaller", v.smaller);
    rep.record(k + "larger", v.larger);
    rep.record(k + "prescribed", v.prescribed);
    rep.record(k + "localized", v.localized);
    rep.text("  " + v.smaller + " inside " + v.larger + ": prescribed " + v.prescribed + ", localized " +
             v.localized);
  }
  if (!cons.pass) {
    rep.field("verdict", "Finiteness", "inconsistent");
    return 1;
  }
  const FinitenessReport fin = check_finiteness(fam, opt.jobs);
  switch (fin.verdict) {
    case FinitenessReport::Verdict::Finite:
      rep.field("verdict", "Finiteness", "finite");
      rep.field("primes", "Associated primes", to_string(fin.primes));
      return 0;
    case FinitenessReport::Verdict::Infinite:
      if (rep.machine())
        rep.record("verdict", "infinite");
      else
        rep.text("Finiteness: infinite (every maximal prime)");
      rep.field("witness", "Witness", fin.witness);
      return 1;
    case FinitenessReport::Verdict::Undecided:
      rep.field("verdict", "Finiteness", "undecided");
      rep.field("reason", "Reason", fin.witness);
      return 1;
  }
  return 1;
}

// --- ass -------------------------------------------------------------------

int cmd_ass(const Options&, Report& rep, const std::string& path) {
  const auto [ctx, m] = with_source(path, [](const text::Value& root) {
    const RingContext ctx = io::load_ring(root);
    return std::make_pair(ctx, io::load_module(ctx, root));
  });
  rep.field("module", "Module", "A^" + std::to_string(m.generators) + " / " + m.relations.to_string());
  rep.field("ass", "Ass", to_string(ass(ctx, m.relations)));
  return 0;
}

// --- reconstruct -----------------------------------------------------------

int cmd_reconstruct(const Options& opt, Report& rep, const std::string& path,
                    const std::vector<std::string>& verify_args) {
  const GermFamily fam = with_source(path, io::load_family);
  std::vector<PrimeIdeal> verify;
  for (const auto& a : verify_args) verify.push_back(io::parse_prime_arg(fam.context, a));
  const FinitenessReport fin = check_finiteness(fam, opt.jobs);
  if (fin.verdict != FinitenessReport::Verdict::Finite) {
    rep.field("verdict", "Finiteness", verdict_name(fin.verdict));
    rep.field("witness", "Witness", fin.witness);
    rep.text("No submodule F realizes this family.");
    return 1;
  }
  const ReconstructionResult res = reconstruct(fam, verify, opt.jobs);
  rep.record("F", res.F.to_string());
  rep.text("F = " + res.F.to_string());
  for (std::size_t i = 0; i < res.F.basis().size(); ++i)
    rep.record("basis." + std::to_string(i), res.F.basis()[i].to_string());
  rep.field("primes", "Primes", to_string(res.primes));
  rep.field("ass_quotient", "Ass(E/F)", to_string(res.ass_of_quotient));
  rep.field("ass_matches", "Ass(E/F) matches", res.ass_matches ? "yes" : "no");
  rep.text("Verification:");
  for (std::size_t i = 0; i < res.table.size(); ++i) {
    const VerificationRow& row = res.table[i];
    const std::string k = "row." + std::to_string(i) + ".";
    rep.record(k + "prime", row.prime.to_string());
    rep.record(k + "prescribed", row.prescribed.to_string());
    rep.record(k + "contracted", row.contracted.to_string());
    rep.record(k + "separator", row.separator.to_string());
    rep.record(k + "exponent", std::to_string(row.exponent));
    rep.record(k + "equal", row.equal ? "yes" : "no");
    rep.text("  " + row.prime.to_string() + "  prescribed " + row.prescribed.to_string() + "  F contracted " +
             row.contracted.to_string() + "  separator " + row.separator.to_string() + "  N = " +
             std::to_string(row.exponent) + "  " + (row.equal ? "ok" : "MISMATCH"));
  }
  rep.field("status", "Status", res.success ? "success" : "alarm");
  if (!res.success) {
    rep.field("alarm", "Alarm", res.alarm);
    return 1;
  }
  return 0;
}

// --- glue-section / glue-hom -----------------------------------------------

std::pair<RingContext, ModulePresentation> load_module_file(const std::string& path) {
  return with_source(path, [](const text::Value& root) {
    const RingContext ctx = io::load_ring(root);
    return std::make_pair(ctx, io::load_module(ctx, root));
  });
}

int cmd_glue_section(const Options& opt, Report& rep, const std::string& module_path,
                     const std::string& germs_path) {
  const auto [ctx, m] = load_module_file(module_path);
  GermSectionFamily fam{ctx, m,
                        with_source(germs_path, [&](const text::Value& root) { return io::load_germs(ctx, m, root); })};
  const GlueResult res = glue_section(fam, opt.jobs);
  rep.field("exists", "Section exists", res.exists ? "yes" : "no");
  if (!res.exists) {
    rep.field("reason", "Reason", res.reason);
    return 1;
  }
  rep.field("section", "Section", res.section.to_string());
  for (std::size_t i = 0; i < res.opens.size(); ++i) {
    rep.record("open." + std::to_string(i) + ".prime", res.opens[i].base.to_string());
    rep.record("open." + std::to_string(i) + ".set", res.opens[i].to_string());
    rep.text("  germ at " + res.opens[i].base.to_string() + " represented on " + res.opens[i].to_string());
  }
  return 0;
}

int cmd_glue_hom(const Options& opt, Report& rep, const std::string& source, const std::string& target,
                 const std::string& germs_path) {
  const auto [ctx, e] = load_module_file(source);
  const auto [ctx_f, f] = load_module_file(target);
  if (!(ctx == ctx_f)) throw RingMismatch("source and target declare different rings");
  const auto germs =
      with_source(germs_path, [&](const text::Value& root) { return io::load_map_germs(ctx, e, f, root); });
  const auto phi = glue_homomorphism(ctx, e, f, germs, opt.jobs);
  rep.field("exists", "Map exists", phi ? "yes" : "no");
  if (!phi) return 1;
  rep.field("matrix", "Matrix", phi->to_string());
  rep.field("well_defined", "Well defined", is_well_defined(*phi, e, f) ? "yes" : "no");
  return 0;
}

// --- germscoh --------------------------------------------------------------

void print_object(Report& rep, const GermsCohObject& s) {
  if (rep.machine()) {
    for (std::size_t i = 0; i < s.primes.size(); ++i) {
      const std::string k = "stalk." + std::to_string(i) + ".";
      rep.record(k + "prime", s.primes[i].to_string());
      rep.record(k + "generators", std::to_string(s.stalks[i].generators));
      rep.record(k + "relations", s.stalks[i].relations.to_string());
    }
    for (std::size_t i = 0; i < s.sigma.size(); ++i) {
      const Transition& t = s.sigma[i];
      const std::string k = "sigma." + std::to_string(i) + ".";
      rep.record(k + "from", s.primes[t.y].to_string());
      rep.record(k + "to", s.primes[t.x].to_string());
      rep.record(k + "matrix", t.map.numerator.to_string());
      rep.record(k + "denominator", t.map.denominator.to_string());
    }
    return;
  }
  YAML::Emitter y;
  y << YAML::BeginMap;
  if (!s.pattern.empty()) y << YAML::Key << "pattern" << YAML::Value << s.pattern;
  emit_ring(y, s.context);
  y << YAML::Key << "stalks" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < s.primes.size(); ++i) {
    y << YAML::BeginMap << YAML::Key << "prime" << YAML::Value;
    emit_prime(y, s.primes[i]);
    y << YAML::Key << "generators" << YAML::Value << s.stalks[i].generators;
    if (!s.stalks[i].relations.generators().empty()) {
      y << YAML::Key << "relations" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (const auto& r : s.stalks[i].relations.generators()) emit_element(y, r);
      y << YAML::EndSeq;
    }
    y << YAML::EndMap;
  }
  y << YAML::EndSeq;
  y << YAML::Key << "sigma" << YAML::Value << YAML::BeginSeq;
  for (const auto& t : s.sigma) {
    y << YAML::BeginMap << YAML::Key << "from" << YAML::Value;
    emit_prime(y, s.primes[t.y]);
    y << YAML::Key << "to" << YAML::Value;
    emit_prime(y, s.primes[t.x]);
    y << YAML::Key << "matrix" << YAML::Value;
    emit_matrix(y, t.map.numerator);
    if (!t.map.denominator.is_one()) {
      y << YAML::Key << "denominator" << YAML::Value;
      emit_poly(y, t.map.denominator);
    }
    y << YAML::EndMap;
  }
  y << YAML::EndSeq << YAML::EndMap;
  rep.raw() << y.c_str() << '\n';
}

int cmd_germscoh_check(const Options& opt, Report& rep, const std::string& path) {
  const GermsCohObject s = with_source(path, io::load_object);
  rep.field("primes", "Primes", s.primes.size());
  rep.field("transitions", "Transitions", s.sigma.size());
  const ObjectCheck oc = validate_object(s);
  rep.field("valid", "Transitions valid", oc.ok ? "yes" : "no");
  for (std::size_t i = 0; i < oc.problems.size(); ++i) {
    rep.record("problem." + std::to_string(i), oc.problems[i]);
    rep.text("  " + oc.problems[i]);
  }
  if (!oc.ok) return 1;
  const CocycleReport cc = cocycle_check(s, opt.jobs);
  rep.field("cocycle", "Cocycle", cc.pass ? "pass" : "fail");
  rep.field("triples_checked", "Chains checked", cc.triples_checked);
  if (!cc.pass) {
    rep.field("violation", "Failing chain", join(cc.violation, " < "));
    return 1;
  }
  const BSetReport b = b_set(s);
  rep.field("b_set", "B(S) on the poset", to_string(b.primes));
  rep.field("b_verdict", "B(S) verdict", verdict_name(b.verdict));
  if (!b.note.empty()) rep.field("b_note", "Note", b.note);
  return 0;
}

int cmd_germscoh_pistar(const Options&, Report& rep, const std::string& path, const std::vector<std::string>& args) {
  const auto [ctx, m] = load_module_file(path);
  std::vector<PrimeIdeal> primes;
  for (const auto& a : args) primes.push_back(io::parse_prime_arg(ctx, a));
  if (primes.empty()) {
    if (ctx.flavor == Flavor::Monomial) {
      primes = all_monomial_primes(ctx);
    } else {
      primes.push_back(PrimeIdeal::zero(ctx));
      for (const auto& p : ass(ctx, m.relations))
        if (!p.is_zero()) primes.push_back(p);
    }
  }
  print_object(rep, pi_star(ctx, m, primes));
  return 0;
}

int cmd_demo_mu(const Options&, Report& rep, unsigned n) {
  const ObstructionReport r = maximal_ideal_obstruction(n);
  rep.field("n", "n", std::to_string(r.n));
  rep.field("generic_rank", "Generic rank", r.generic_rank);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    std::string pt = "(";
    for (std::size_t j = 0; j < r.points[i].size(); ++j) pt += (j ? ", " : "") + std::to_string(r.points[i][j]);
    pt += ")";
    rep.record("point." + std::to_string(i), pt);
    rep.record("mu." + std::to_string(i), std::to_string(r.mu[i]));
    rep.text("  mu at " + pt + " = " + std::to_string(r.mu[i]));
  }
  rep.field("obstruction", "Obstruction", r.obstruction ? "yes" : "no");
  rep.field("summary", "Summary", r.summary);
  return 0;
}

// --- oracle ----------------------------------------------------------------

int cmd_oracle(const Options& opt, Report& rep, const std::string& ring, unsigned rank) {
  std::vector<std::string> names = ring == "all" ? finite::FiniteRing::suite() : std::vector<std::string>{ring};
  std::size_t total = 0;
  for (const auto& name : names) {
    const finite::FiniteRing a = finite::FiniteRing::by_name(name);
    const finite::OracleReport fam = finite::oracle_families(a, rank, opt.jobs);
    const finite::OracleReport loc = finite::oracle_localization(a, rank, opt.jobs);
    const std::string k = name + ".";
    rep.record(k + "rank", std::to_string(rank));
    rep.record(k + "submodules", std::to_string(fam.submodules));
    rep.record(k + "families", std::to_string(fam.families));
    rep.record(k + "modules", std::to_string(loc.modules));
    rep.record(k + "violations", std::to_string(fam.violations + loc.violations));
    rep.text(name + " (rank " + std::to_string(rank) + "): submodules " + std::to_string(fam.submodules) +
             ", families checked: " + std::to_string(fam.families) + ", modules checked: " +
             std::to_string(loc.modules) + ", violations: " + std::to_string(fam.violations + loc.violations));
    for (const auto& c : fam.counterexamples) rep.text("  " + c);
    for (const auto& c : loc.counterexamples) rep.text("  " + c);
    total += fam.violations + loc.violations;
  }
  rep.field("violations", "Total violations", total);
  return total == 0 ? 0 : 1;
}

// --- demo example5 ---------------------------------------------------------

int cmd_demo_pattern(const Options& opt, Report& rep, const std::vector<std::string>& args) {
  const RingPtr r = make_ring({"t"});
  const RingContext ctx = RingContext::univariate(r);
  const FinitenessReport full = check_finiteness(GermFamily(ctx, 1, {}, GenericRule::maximal_ideal_pattern()), opt.jobs);
  rep.field("pattern_verdict", "Pattern J(m) = mA_m at every maximal m", verdict_name(full.verdict));
  rep.field("pattern_witness", "Witness", full.witness);

  std::vector<std::string> primes = args;
  if (primes.empty()) primes = {"poly:t", "poly:t-1", "poly:t^2+1"};
  std::vector<LocalizedSubmodule> entries;
  std::vector<Polynomial> gens;
  Polynomial product = Polynomial::constant(r, 1);
  for (const auto& a : primes) {
    const PrimeIdeal p = io::parse_prime_arg(ctx, a);
    if (p.is_zero()) throw PreconditionError("truncation primes must be maximal");
    entries.push_back({p, 1, {ModuleElement(p.generators()[0])}});
    product = product * p.generators()[0];
  }
  const GermFamily trunc(ctx, 1, entries, GenericRule::full());
  const FinitenessReport fin = check_finiteness(trunc, opt.jobs);
  rep.field("truncated_verdict", "Truncated to " + std::to_string(entries.size()) + " primes",
            verdict_name(fin.verdict));
  if (fin.verdict != FinitenessReport::Verdict::Finite) return 1;
  const ReconstructionResult res = reconstruct(trunc, {}, opt.jobs);
  const Submodule direct = Submodule::ideal(r, {product});
  rep.field("F", "F", res.F.to_string());
  rep.field("product", "Product of the primes", direct.to_string());
  const bool ok = full.verdict == FinitenessReport::Verdict::Infinite && res.success && res.F == direct;
  rep.field("status", "Status", ok ? "as expected" : "unexpected");
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstruct submodules from prescribed germs at primes", "germs"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--order", opt.order, "Monomial order, overrides the ring block")
      ->check(CLI::IsMember({"grevlex", "lex"}));

  std::string family, module, germs_file, source, target, object, ring = "all", module_kind;
  std::vector<std::string> verify, primes;
  unsigned rank = 1, n = 2;

  auto* check = app.add_subcommand("check", "Consistency and finiteness of a family");
  check->add_option("--family", family)->required();
  auto* ass_cmd = app.add_subcommand("ass", "Associated primes of a module");
  ass_cmd->add_option("--module", module)->required();
  auto* rec = app.add_subcommand("reconstruct", "Reconstruct F from a family");
  rec->add_option("--family", family)->required();
  rec->add_option("--verify-at", verify, "Extra verification primes: x,y | poly:<f> | zero");
  auto* gs = app.add_subcommand("glue-section", "Glue germs of sections");
  gs->add_option("--module", module)->required();
  gs->add_option("--germs", germs_file)->required();
  auto* gh = app.add_subcommand("glue-hom", "Glue germs of homomorphisms");
  gh->add_option("--source", source)->required();
  gh->add_option("--target", target)->required();
  gh->add_option("--germs", germs_file)->required();
  auto* gc = app.add_subcommand("germscoh", "Objects on a finite prime poset");
  gc->require_subcommand(1);
  auto* gc_check = gc->add_subcommand("check", "Validate transitions and the cocycle condition");
  gc_check->add_option("--object", object)->required();
  auto* gc_pi = gc->add_subcommand("pistar", "Print the object of a module");
  gc_pi->add_option("--module", module)->required();
  gc_pi->add_option("--primes", primes, "Poset primes (default: all monomial primes)");
  auto* gc_12 = gc->add_subcommand("demo-example12", "Sampled generator-count obstruction (demo)");
  gc_12->add_option("--n", n)->check(CLI::Range(1u, 4u));
  auto* orc = app.add_subcommand("oracle", "Exhaustive finite-ring oracle");
  orc->add_option("--ring", ring, "Ring name or all");
  orc->add_option("--rank", rank)->check(CLI::Range(1u, 3u));
  orc->add_option("--module", module_kind, "self (rank one)")->check(CLI::IsMember({"self"}));
  auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
  demo->require_subcommand(1);
  auto* ex5 = demo->add_subcommand("example5", "Maximal-ideal pattern over k[t]");
  ex5->add_option("--primes", primes, "Truncation primes (default t, t-1, t^2+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::Error& e) {
    // Help requested on a subcommand is also routed here.
    if (e.get_exit_code() == 0) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!module_kind.empty()) rank = 1;
  order_override = opt.order;

  std::ostringstream buf;
  Report rep(buf, opt.format == "machine");
  int code = 2;
  try {
    if (*check)
      code = cmd_check(opt, rep, family);
    else if (*ass_cmd)
      code = cmd_ass(opt, rep, module);
    else if (*rec)
      code = cmd_reconstruct(opt, rep, family, verify);
    else if (*gs)
      code = cmd_glue_section(opt, rep, module, germs_file);
    else if (*gh)
      code = cmd_glue_hom(opt, rep, source, target, germs_file);
    else if (*gc_check)
      code = cmd_germscoh_check(opt, rep, object);
    else if (*gc_pi)
      code = cmd_germscoh_pistar(opt, rep, module, primes);
    else if (*gc_12)
      code = cmd_demo_mu(opt, rep, n);
    else if (*orc)
      code = cmd_oracle(opt, rep, ring, rank);
    else if (*ex5)
      code = cmd_demo_pattern(opt, rep, primes);
  } catch (const Inconsistent& e) {
    out << buf.str();
    if (opt.format == "machine")
      out << "verdict=inconsistent\nreason=" << e.what() << '\n';
    else
      out << "Inconsistent: " << e.what() << '\n';
    return 1;
  } catch (const UnsupportedFlavor& e) {
    err << "error: " << e.what() << "\n"
        << "hint: the monomial engine needs submodules generated by terms (one monomial per component); "
           "one-variable rings can use engine = \"univariate\"\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << buf.str();
  return code;
}

}  // namespace germs
