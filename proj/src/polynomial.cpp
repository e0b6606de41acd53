#include "germs/polynomial.hpp"

#include <algorithm>

#include "germs/error.hpp"

namespace germs {

namespace {

// Merges two descending term lists; `sign` = -1 subtracts.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  const auto& ord = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long c) {
  return constant(ring, Scalar(ring->field(), c));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
  return term(ring, Monomial::variable(ring->nvars(), i), Scalar::one(ring->field()));
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, Scalar c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff.is_one();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t i) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
  return d;
}

void Polynomial::check(const Polynomial& o) const { require_same_ring(ring_, o.ring_); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  terms_ = merge(*ring_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check(o);
  terms_ = merge(*ring_, terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  // Accumulate row by row: each row a_i*b is already sorted.
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const auto& t : small.terms_) acc += large.times_term(t.monomial, t.coeff);
  return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Scalar::zero(ring_->field());
}

Polynomial Polynomial::map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (target->field() != ring_->field()) throw RingMismatch("map_to: coefficient fields differ");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) m[var_map[i]] += t.monomial[i];
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff.prints_negative();
    const Scalar mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_to_string(*ring_, t.monomial);
    if (mono.empty()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.to_string() + "*" + mono;
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  std::vector<Polynomial>* quotients) {
  const RingPtr& ring = f.ring();
  if (quotients) quotients->assign(divisors.size(), Polynomial(ring));
  Polynomial p = f;
  Polynomial rem(ring);
  std::vector<Term> rem_terms;
  while (!p.is_zero()) {
    const Term lt = p.terms().front();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero() || !g.leading_monomial().divides(lt.monomial)) continue;
      const Monomial q = lt.monomial / g.leading_monomial();
      const Scalar c = lt.coeff / g.leading_coeff();
      p -= g.times_term(q, c);
      if (quotients) (*quotients)[i] += Polynomial::term(ring, q, c);
      divided = true;
      break;
    }
    if (!divided) {
      rem_terms.push_back(lt);
      p -= Polynomial::term(ring, lt.monomial, lt.coeff);
    }
  }
  // rem_terms were produced in descending order.
  return Polynomial::from_terms(ring, std::move(rem_terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("divide_exact: division by zero polynomial");
  std::vector<Polynomial> q;
  Polynomial r = reduce(f, {g}, &q);
  if (!r.is_zero()) return std::nullopt;
  return q[0];
}

}  // namespace germs
