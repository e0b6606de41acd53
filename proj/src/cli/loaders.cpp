#include "germs/loaders.hpp"

#include "germs/error.hpp"
#include "germs/parse.hpp"

namespace germs::io {

namespace {

Field parse_field(const text::Value& v) {
  const std::string& s = v.as_string();
  if (s == "QQ" || s == "Q") return Field::rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    try {
      std::size_t used = 0;
      const unsigned long p = std::stoul(s.substr(3, s.size() - 4), &used);
      if (used == s.size() - 4) return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    } catch (const Error& e) {
      v.fail(e.what());
    }
  }
  v.fail("unknown field '" + s + "' (use QQ or GF(p))");
}

Polynomial parse_text(const RingPtr& ring, const std::string& s, int line, int column) {
  try {
    return parse_polynomial(ring, s);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, column + e.column());
  }
}

std::size_t count_field(const text::Value& v) {
  const long long n = v.as_int();
  if (n < 0 || n > 64) v.fail("expected a count between 0 and 64");
  return static_cast<std::size_t>(n);
}

}  // namespace

RingContext load_ring(const text::Value& root) {
  const text::Value& r = root.at("ring");
  std::vector<std::string> vars;
  for (const auto& v : r.at("vars").as_array()) vars.push_back(v.as_string());
  if (vars.empty()) r.at("vars").fail("at least one variable is required");
  const Field field = r.find("field") ? parse_field(r.at("field")) : Field::rationals();
  MonomialOrder order = MonomialOrder::grevlex();
  if (const auto* o = r.find("order")) {
    if (o->as_string() == "lex")
      order = MonomialOrder::lex();
    else if (o->as_string() != "grevlex")
      o->fail("unknown monomial order '" + o->as_string() + "' (use grevlex or lex)");
  }
  RingPtr ring;
  try {
    ring = make_ring(vars, field, order);
  } catch (const Error& e) {
    r.at("vars").fail(e.what());
  }
  std::string engine = vars.size() == 1 ? "univariate" : "monomial";
  if (const auto* e = r.find("engine")) engine = e->as_string();
  const bool local = r.find("local") && r.at("local").as_bool();
  try {
    if (engine == "monomial") return RingContext::monomial(ring, local);
    if (engine == "univariate") {
      if (local) r.at("local").fail("the univariate engine has no local variant");
      return RingContext::univariate(ring);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail(e.what());
  }
  r.at("engine").fail("unknown engine '" + engine + "' (use monomial or univariate)");
}

Polynomial parse_poly(const RingPtr& ring, const text::Value& v) {
  return parse_text(ring, v.as_string(), v.line, v.column);
}

PrimeIdeal parse_prime(const RingContext& ctx, const text::Value& v) {
  if (v.kind != text::Value::Kind::Table) v.fail("a prime is written {vars: [...]}, {poly: \"...\"} or {zero: true}");
  try {
    if (const auto* z = v.find("zero")) {
      if (!z->as_bool()) z->fail("zero must be true");
      return PrimeIdeal::zero(ctx);
    }
    if (const auto* vars = v.find("vars")) {
      std::vector<std::string> names;
      for (const auto& n : vars->as_array()) names.push_back(n.as_string());
      return PrimeIdeal::monomial(ctx, names);
    }
    if (const auto* p = v.find("poly")) return PrimeIdeal::univariate(ctx, UPoly::from_polynomial(parse_poly(ctx.ring, *p)));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    v.fail(e.what());
  }
  v.fail("a prime needs one of vars, poly or zero");
}

PrimeIdeal parse_prime_arg(const RingContext& ctx, const std::string& arg) {
  if (arg == "zero" || arg == "0") return PrimeIdeal::zero(ctx);
  if (arg.rfind("poly:", 0) == 0) {
    Polynomial f;
    try {
      f = parse_text(ctx.ring, arg.substr(5), 1, 5);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.line(), e.column(), "prime argument '" + arg + "'");
    }
    return PrimeIdeal::univariate(ctx, UPoly::from_polynomial(f));
  }
  std::vector<std::string> names;
  std::string cur;
  for (const char c : arg + ",") {
    if (c == ',') {
      if (cur.empty()) throw ParseError("empty variable name in prime '" + arg + "'", 1, 1);
      names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return PrimeIdeal::monomial(ctx, names);
}

ModuleElement parse_element(const RingPtr& ring, std::size_t rank, const text::Value& v) {
  if (v.kind == text::Value::Kind::String) {
    if (rank != 1) v.fail("expected an array of " + std::to_string(rank) + " polynomials");
    return ModuleElement(parse_poly(ring, v));
  }
  const auto& items = v.as_array();
  if (items.size() != rank)
    v.fail("expected " + std::to_string(rank) + " components, found " + std::to_string(items.size()));
  std::vector<Polynomial> comps;
  for (const auto& c : items) comps.push_back(parse_poly(ring, c));
  return ModuleElement(ring, std::move(comps));
}

std::vector<ModuleElement> parse_elements(const RingPtr& ring, std::size_t rank, const text::Value& v) {
  std::vector<ModuleElement> out;
  for (const auto& e : v.as_array()) out.push_back(parse_element(ring, rank, e));
  return out;
}

Matrix parse_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, const text::Value& v) {
  const auto& rs = v.as_array();
  if (rs.size() != rows) v.fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(rs.size()));
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = rs[i].as_array();
    if (row.size() != cols)
      rs[i].fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_poly(ring, row[j]);
  }
  return m;
}

GermFamily load_family(const text::Value& root) {
  const RingContext ctx = load_ring(root);
  const std::size_t rank = count_field(root.at("rank"));
  std::vector<LocalizedSubmodule> entries;
  for (const auto& e : root.tables("entries")) {
    const PrimeIdeal p = parse_prime(ctx, e.at("prime"));
    entries.push_back({p, rank, parse_elements(ctx.ring, rank, e.at("stalk"))});
  }
  GenericRule rule = GenericRule::full();
  if (const auto* g = root.find("generic")) {
    const std::string& name = g->at("rule").as_string();
    if (name == "from-submodule")
      rule = GenericRule::from_submodule(Submodule(ctx.ring, rank, parse_elements(ctx.ring, rank, g->at("submodule"))));
    else if (name == "full" || name == "constant")
      rule = GenericRule::full();
    else if (name == "maximal-ideal")
      rule = GenericRule::maximal_ideal_pattern();
    else
      rule = GenericRule::unsupported(name);
  }
  try {
    return GermFamily(ctx, rank, std::move(entries), std::move(rule));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    root.fail(e.what());
  }
}

ModulePresentation load_module(const RingContext& ctx, const text::Value& root) {
  const text::Value& m = root.at("module");
  const std::size_t g = count_field(m.at("generators"));
  std::vector<ModuleElement> rels;
  if (const auto* r = m.find("relations")) rels = parse_elements(ctx.ring, g, *r);
  return ModulePresentation(ctx.ring, g, std::move(rels));
}

std::vector<Germ> load_germs(const RingContext& ctx, const ModulePresentation& m, const text::Value& root) {
  std::vector<Germ> out;
  for (const auto& g : root.tables("germs")) {
    Germ germ{parse_prime(ctx, g.at("prime")), parse_element(ctx.ring, m.generators, g.at("numerator")),
              Polynomial::constant(ctx.ring, 1)};
    if (const auto* d = g.find("denominator")) germ.denominator = parse_poly(ctx.ring, *d);
    out.push_back(std::move(germ));
  }
  return out;
}

std::vector<MapGerm> load_map_germs(const RingContext& ctx, const ModulePresentation& e,
                                    const ModulePresentation& f, const text::Value& root) {
  std::vector<MapGerm> out;
  for (const auto& g : root.tables("germs")) {
    MapGerm germ{parse_prime(ctx, g.at("prime")), parse_matrix(ctx.ring, f.generators, e.generators, g.at("matrix")),
                 Polynomial::constant(ctx.ring, 1)};
    if (const auto* d = g.find("denominator")) germ.denominator = parse_poly(ctx.ring, *d);
    out.push_back(std::move(germ));
  }
  return out;
}

GermsCohObject load_object(const text::Value& root) {
  GermsCohObject s;
  s.context = load_ring(root);
  const RingPtr& ring = s.context.ring;
  if (const auto* p = root.find("pattern")) s.pattern = p->as_string();
  for (const auto& st : root.tables("stalks")) {
    s.primes.push_back(parse_prime(s.context, st.at("prime")));
    const std::size_t g = count_field(st.at("generators"));
    std::vector<ModuleElement> rels;
    if (const auto* r = st.find("relations")) rels = parse_elements(ring, g, *r);
    s.stalks.push_back(ModulePresentation(ring, g, std::move(rels)));
  }
  auto index_of = [&](const text::Value& v) {
    const PrimeIdeal p = parse_prime(s.context, v);
    for (std::size_t i = 0; i < s.primes.size(); ++i)
      if (s.primes[i] == p) return i;
    v.fail("prime " + p.to_string() + " has no entry under stalks");
  };
  for (const auto& sg : root.tables("sigma")) {
    Transition t;
    t.y = index_of(sg.at("from"));
    t.x = index_of(sg.at("to"));
    t.map.numerator = parse_matrix(ring, s.stalks[t.x].generators, s.stalks[t.y].generators, sg.at("matrix"));
    t.map.denominator = Polynomial::constant(ring, 1);
    if (const auto* d = sg.find("denominator")) t.map.denominator = parse_poly(ring, *d);
    s.sigma.push_back(std::move(t));
  }
  return s;
}

}  // namespace germs::io
