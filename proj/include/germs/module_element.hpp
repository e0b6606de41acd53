#pragma once

#include <string>
#include <vector>

#include "germs/polynomial.hpp"

namespace germs {

/// Element of the free module A^r, one polynomial per component.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(RingPtr ring, std::size_t rank);
  ModuleElement(RingPtr ring, std::vector<Polynomial> components);
  /// Rank-one element wrapping a polynomial.
  explicit ModuleElement(const Polynomial& f);

  static ModuleElement basis(const RingPtr& ring, std::size_t rank, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  Polynomial& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  bool is_zero() const;
  /// Zero, or a single term in a single component.
  bool is_monomial() const;

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  ModuleElement operator-() const;
  ModuleElement scaled(const Polynomial& f) const;

  /// Rank one prints as the bare polynomial, otherwise "[f1, f2, ...]".
  std::string to_string() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  void check(const ModuleElement& o) const;

  RingPtr ring_;
  std::vector<Polynomial> comps_;
};

/// Dense polynomial matrix; a homomorphism A^cols -> A^rows acting on columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingPtr& ring, std::size_t n);
  static Matrix from_columns(const RingPtr& ring, std::size_t rows,
                             const std::vector<ModuleElement>& columns);
  /// Inverse of vec(): column j occupies components [j*rows, (j+1)*rows).
  static Matrix from_vec(const ModuleElement& v, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  ModuleElement column(std::size_t j) const;
  std::vector<ModuleElement> columns() const;
  /// Column-major stacking into A^(rows*cols).
  ModuleElement vec() const;

  bool is_zero() const;
  Matrix scaled(const Polynomial& f) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend ModuleElement operator*(const Matrix& a, const ModuleElement& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

  /// "[[a, b], [c, d]]" by rows.
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

}  // namespace germs
