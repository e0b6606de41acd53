#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace germs {

/// Exponent vector of a monomial; its length is the variable count of the ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_[i] = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  /// True when this divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A monomial order. `elimination_block` > 0 prepends a block formed by the
/// first k variables which dominates every other comparison (including the
/// position of module terms); inside and after the block `kind` applies.
struct MonomialOrder {
  enum class Kind { Lex, Grevlex };

  Kind kind = Kind::Grevlex;
  std::size_t elimination_block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t k, Kind rest = Kind::Grevlex) { return {rest, k}; }

  /// Three-way comparison: negative, zero or positive.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Comparison restricted to the elimination block (0 when no block).
  int compare_block(const Monomial& a, const Monomial& b) const;
  /// Comparison of the variables after the block.
  int compare_rest(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// How module terms m*e_i are ordered: position over term compares the
/// component first (lower index is larger); term over position compares the
/// monomial first.
enum class Position { OverTerm, TermOver };

}  // namespace germs
