#include "germs/univariate.hpp"

#include <algorithm>
#include <random>

#include "germs/error.hpp"

namespace germs {

UPoly::UPoly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    if (!(c.field() == f)) c = Scalar(f, c.value());
  trim();
}

UPoly UPoly::constant(Field f, long c) { return UPoly(f, {Scalar(f, c)}); }

UPoly UPoly::monomial(Field f, std::size_t degree) {
  std::vector<Scalar> c(degree + 1, Scalar::zero(f));
  c[degree] = Scalar::one(f);
  return UPoly(f, std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  const Field f = p.ring()->field();
  std::vector<Scalar> c;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (i != var && t.monomial[i] != 0)
        throw PreconditionError("polynomial " + p.to_string() + " is not univariate");
    const std::size_t d = t.monomial[var];
    if (c.size() <= d) c.resize(d + 1, Scalar::zero(f));
    c[d] = t.coeff;
  }
  return UPoly(f, std::move(c));
}

Polynomial UPoly::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      terms.push_back({Monomial::variable(ring->nvars(), var, static_cast<std::uint32_t>(i)), coeffs_[i]});
  return Polynomial::from_terms(ring, std::move(terms));
}

bool UPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

Scalar UPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

UPoly UPoly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  const Scalar inv = lead().inverse();
  UPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c.push_back(coeffs_[i] * Scalar(field_, static_cast<long>(i)));
  return UPoly(field_, std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(a.field_, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UPoly(a.field_, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(a.field_, std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  UPoly r = *this;
  if (r.degree() < d.degree()) return {UPoly(field_), r};
  std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), Scalar::zero(field_));
  const Scalar inv = d.lead().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    const Scalar c = r.lead() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) r.coeffs_[i + shift] -= c * d.coeffs_[i];
    r.trim();
  }
  return {UPoly(field_, std::move(q)), r};
}

std::string UPoly::to_string(const std::string& var) const {
  return to_polynomial(make_ring({var}, field_)).to_string();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const mpq_class& x = a.coeffs()[static_cast<std::size_t>(i)].value();
    const mpq_class& y = b.coeffs()[static_cast<std::size_t>(i)].value();
    if (x != y) return x < y;
  }
  return false;
}

namespace {

// Polynomials over Z/p with p < 2^31, low degree first.
namespace zp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly* q, Poly* r) {
  Poly rem = a;
  Poly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::uint64_t li = inv(b.back(), p);
  while (rem.size() >= b.size() && !rem.empty()) {
    const std::size_t shift = rem.size() - b.size();
    const std::uint64_t c = rem.back() * li % p;
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      rem[i + shift] = (rem[i + shift] + p - c * b[i] % p) % p;
    trim(rem);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

Poly div(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q;
  divmod(a, b, p, &q, nullptr);
  return q;
}

Poly monic(Poly a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t li = inv(a.back(), p);
  for (auto& c : a) c = c * li % p;
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

// Returns monic g = s*a + t*b.
Poly ext_gcd(const Poly& a, const Poly& b, std::uint64_t p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, &q, &r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t li = inv(r0.back(), p);
  for (auto& c : s0) c = c * li % p;
  for (auto& c : t0) c = c * li % p;
  s = std::move(s0);
  t = std::move(t0);
  return monic(std::move(r0), p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  trim(r);
  return r;
}

Poly powmod(Poly a, mpz_class e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  a = mod(a, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, a, p), f, p);
    a = mod(mul(a, a, p), f, p);
    e >>= 1;
  }
  return r;
}

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

struct Factor {
  Poly f;
  unsigned mult;
};

std::vector<Factor> squarefree(const Poly& f, std::uint64_t p) {
  std::vector<Factor> out;
  const Poly fp = derivative(f, p);
  auto pth_root = [&](const Poly& c) {
    Poly r;
    for (std::size_t i = 0; i < c.size(); i += p) r.push_back(c[i]);
    return r;
  };
  if (fp.empty()) {
    for (auto& g : squarefree(pth_root(f), p)) out.push_back({g.f, g.mult * static_cast<unsigned>(p)});
    return out;
  }
  Poly c = gcd(f, fp, p);
  Poly w = div(f, c, p);
  unsigned i = 1;
  while (w.size() > 1) {
    Poly y = gcd(w, c, p);
    Poly z = div(w, y, p);
    if (z.size() > 1) out.push_back({monic(z, p), i});
    ++i;
    w = std::move(y);
    c = div(c, w, p);
  }
  if (c.size() > 1)
    for (auto& g : squarefree(pth_root(c), p)) out.push_back({g.f, g.mult * static_cast<unsigned>(p)});
  return out;
}

void equal_degree(const Poly& f, std::size_t d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (f.size() - 1 == d) {
    out.push_back(f);
    return;
  }
  const std::size_t n = f.size() - 1;
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (a.size() < 2) continue;
    Poly b;
    if (p == 2) {
      Poly t = a, s = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = mod(mul(t, t, p), f, p);
        s = add(s, t, p);
      }
      b = s;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, d);
      e = (e - 1) / 2;
      b = sub(powmod(a, e, f, p), Poly{1}, p);
    }
    Poly g = gcd(b, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(div(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// Irreducible factors of a monic squarefree polynomial.
std::vector<Poly> factor_squarefree(Poly f, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly h{0, 1};
  const Poly x{0, 1};
  for (std::size_t d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (g.size() > 1) {
      equal_degree(g, d, p, rng, out);
      f = div(f, g, p);
      h = mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(monic(f, p));
  return out;
}

std::vector<Factor> factor(const Poly& f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eed + p);
  std::vector<Factor> out;
  for (const auto& sq : squarefree(monic(f, p), p))
    for (auto& g : factor_squarefree(sq.f, p, rng)) out.push_back({std::move(g), sq.mult});
  return out;
}

}  // namespace zp

// Polynomials over Z, low degree first.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

zp::Poly to_zp(const ZPoly& a, std::uint64_t p) {
  zp::Poly r;
  for (const auto& c : a) {
    mpz_class m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
    r.push_back(m.get_ui());
  }
  zp::trim(r);
  return r;
}

ZPoly from_zp(const zp::Poly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

void reduce_mod(ZPoly& a, const mpz_class& m, bool symmetric) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (symmetric && c > half) c -= m;
  }
  ztrim(a);
}

ZPoly primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact quotient a/b in Z[t], or empty optional.
std::optional<ZPoly> zdiv_exact(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const std::size_t shift = a.size() - b.size();
    const mpz_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    ztrim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

// Lifts G ≡ g*h (mod p), g monic, to G ≡ g_k*h_k (mod p^k).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& G, const zp::Poly& g, const zp::Poly& h,
                                    std::uint64_t p, unsigned k) {
  zp::Poly s, t;
  zp::ext_gcd(g, h, p, s, t);
  ZPoly gz = from_zp(g), hz = from_zp(h);
  mpz_class pj = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < k; ++j) {
    ZPoly diff = G;
    const ZPoly prod = zmul(gz, hz);
    diff.resize(std::max(diff.size(), prod.size()), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    for (auto& c : diff) c /= pj;
    ztrim(diff);
    const zp::Poly e = to_zp(diff, p);
    zp::Poly q, dg;
    zp::divmod(zp::mul(e, t, p), g, p, &q, &dg);
    const zp::Poly dh = zp::add(zp::mul(e, s, p), zp::mul(q, h, p), p);
    gz.resize(std::max(gz.size(), dg.size()), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) gz[i] += pj * static_cast<unsigned long>(dg[i]);
    hz.resize(std::max(hz.size(), dh.size()), 0);
    for (std::size_t i = 0; i < dh.size(); ++i) hz[i] += pj * static_cast<unsigned long>(dh[i]);
    pj *= static_cast<unsigned long>(p);
  }
  reduce_mod(gz, pj, false);
  reduce_mod(hz, pj, false);
  return {gz, hz};
}

std::vector<ZPoly> hensel_all(const ZPoly& G, const std::vector<zp::Poly>& factors, std::uint64_t p,
                              unsigned k, const mpz_class& pk) {
  if (factors.size() == 1) {
    mpz_class li;
    mpz_invert(li.get_mpz_t(), G.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly m = G;
    for (auto& c : m) c *= li;
    reduce_mod(m, pk, false);
    return {m};
  }
  zp::Poly rest = to_zp(ZPoly{G.back()}, p);
  for (std::size_t i = 1; i < factors.size(); ++i) rest = zp::mul(rest, factors[i], p);
  auto [gk, hk] = hensel_pair(G, factors[0], rest, p, k);
  std::vector<zp::Poly> tail(factors.begin() + 1, factors.end());
  std::vector<ZPoly> out{gk};
  for (auto& f : hensel_all(hk, tail, p, k, pk)) out.push_back(std::move(f));
  return out;
}

bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Zassenhaus factorization of a squarefree primitive integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly G) {
  const std::size_t n = G.size() - 1;
  if (n <= 1) return {G};

  std::uint64_t best_p = 0;
  std::vector<zp::Poly> best;
  int good = 0;
  for (std::uint64_t p = 3; good < 5; p += 2) {
    if (!small_prime(p)) continue;
    if (mpz_divisible_ui_p(G.back().get_mpz_t(), p)) continue;
    const zp::Poly gp = to_zp(G, p);
    if (!zp::is_one(zp::gcd(gp, zp::derivative(gp, p), p))) continue;
    std::vector<zp::Poly> fs;
    for (auto& f : zp::factor(gp, p)) fs.push_back(std::move(f.f));
    ++good;
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
  }
  if (best.size() == 1) return {G};
  const std::uint64_t p = best_p;

  mpz_class norm2 = 0;
  for (const auto& c : G) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= n;
  bound *= abs(G.back());
  unsigned k = 1;
  mpz_class pk = static_cast<unsigned long>(p);
  while (pk <= 2 * bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_all(G, best, p, k, pk);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{G.back()};
      for (std::size_t i : idx) {
        cand = zmul(cand, lifted[remaining[i]]);
        reduce_mod(cand, pk, false);
      }
      reduce_mod(cand, pk, true);
      cand = primitive(cand);
      if (auto q = zdiv_exact(G, cand)) {
        result.push_back(cand);
        G = primitive(*q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == remaining.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (G.size() > 1) result.push_back(G);
  return result;
}

UPoly to_rational_monic(const ZPoly& z) {
  std::vector<Scalar> c;
  for (const auto& v : z) c.emplace_back(Field::rationals(), mpq_class(v));
  return UPoly(Field::rationals(), std::move(c)).monic();
}

ZPoly to_primitive_integer(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.value().get_den());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(mpz_class(c.value() * den));
  return primitive(z);
}

std::vector<UFactor> factor_rational(const UPoly& f) {
  std::vector<UFactor> out;
  // Yun's squarefree decomposition (characteristic zero).
  UPoly a = f.monic();
  UPoly b = a.derivative();
  UPoly c = gcd(a, b);
  UPoly w = a / c;
  UPoly y = b / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly z = y - w.derivative();
    UPoly g = gcd(w, z);
    if (g.degree() > 0)
      for (auto& piece : zassenhaus(to_primitive_integer(g))) out.push_back({to_rational_monic(piece), i});
    w = w / g;
    y = z / g;
    ++i;
  }
  return out;
}

}  // namespace

std::vector<UFactor> factor(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  std::vector<UFactor> out;
  if (f.degree() == 0) return out;
  const Field field = f.field();
  if (field.is_rational()) {
    out = factor_rational(f);
  } else {
    const std::uint64_t p = field.characteristic();
    zp::Poly g;
    for (const auto& c : f.coeffs()) g.push_back(c.value().get_num().get_ui());
    for (auto& fac : zp::factor(g, p)) {
      std::vector<Scalar> c;
      for (auto v : fac.f) c.emplace_back(field, static_cast<long>(v));
      out.push_back({UPoly(field, std::move(c)), fac.mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const UFactor& x, const UFactor& y) { return upoly_less(x.factor, y.factor); });
  return out;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() < 1) return false;
  const auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

SmithInvariants smith_invariants(const ModulePresentation& m) {
  if (m.ring->nvars() != 1) throw UnsupportedFlavor("Smith form needs a one-variable ring");
  const Field field = m.ring->field();
  const std::size_t rows = m.generators;
  const auto& rels = m.relations.basis();
  const std::size_t cols = rels.size();
  std::vector<std::vector<UPoly>> a(rows, std::vector<UPoly>(cols, UPoly(field)));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = UPoly::from_polynomial(rels[j][i]);

  std::vector<UPoly> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto place_min = [&](bool whole) {
      int best = -1;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole && i != t && j != t) continue;
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
        }
      if (best < 0) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!place_min(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        const UPoly q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
        clean = clean && a[i][t].is_zero();
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        const UPoly q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = a[i][j] - q * a[i][t];
        clean = clean && a[t][j].is_zero();
      }
      if (clean) break;
      place_min(false);
    }
    diag.push_back(a[t][t].monic());
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const UPoly g = gcd(diag[i], diag[j]);
      const UPoly l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  SmithInvariants out;
  out.free_rank = rows - diag.size();
  for (auto& d : diag)
    if (d.degree() > 0) out.invariants.push_back(std::move(d));
  return out;
}

}  // namespace germs
