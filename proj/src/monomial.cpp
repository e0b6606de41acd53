#include "germs/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace germs {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    assert(r.exps_[i] >= b.exps_[i]);
    r.exps_[i] -= b.exps_[i];
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], b.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

int cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
              MonomialOrder::Kind kind) {
  if (kind == MonomialOrder::Kind::Lex) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b) const {
  if (elimination_block == 0) return 0;
  return cmp_range(a, b, 0, elimination_block, Kind::Grevlex);
}

int MonomialOrder::compare_rest(const Monomial& a, const Monomial& b) const {
  return cmp_range(a, b, elimination_block, a.size(), kind);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (int c = compare_block(a, b)) return c;
  return compare_rest(a, b);
}

std::string MonomialOrder::name() const {
  std::string base = kind == Kind::Lex ? "lex" : "grevlex";
  if (elimination_block == 0) return base;
  return "elim(" + std::to_string(elimination_block) + ")+" + base;
}

}  // namespace germs
