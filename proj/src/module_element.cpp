#include "germs/module_element.hpp"

#include "germs/error.hpp"

namespace germs {

ModuleElement::ModuleElement(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), comps_(rank, Polynomial(ring_)) {}

ModuleElement::ModuleElement(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  for (const auto& c : comps_)
    if (!c.is_zero()) require_same_ring(ring_, c.ring());
  for (auto& c : comps_)
    if (c.is_zero()) c = Polynomial(ring_);
}

ModuleElement::ModuleElement(const Polynomial& f) : ring_(f.ring()), comps_{f} {}

ModuleElement ModuleElement::basis(const RingPtr& ring, std::size_t rank, std::size_t i) {
  ModuleElement e(ring, rank);
  e.comps_.at(i) = Polynomial::constant(ring, 1);
  return e;
}

bool ModuleElement::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool ModuleElement::is_monomial() const {
  std::size_t terms = 0;
  for (const auto& c : comps_) terms += c.size();
  return terms <= 1;
}

void ModuleElement::check(const ModuleElement& o) const {
  require_same_ring(ring_, o.ring_);
  if (rank() != o.rank())
    throw RankMismatch("module elements of rank " + std::to_string(rank()) + " and " +
                       std::to_string(o.rank()));
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  check(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  check(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

ModuleElement ModuleElement::scaled(const Polynomial& f) const {
  ModuleElement r = *this;
  for (auto& c : r.comps_) c = c * f;
  return r;
}

std::string ModuleElement::to_string() const {
  if (comps_.size() == 1) return comps_[0].to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? ", " : "") + comps_[i].to_string();
  return s + "]";
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return a.rank() == b.rank() && a.comps_ == b.comps_;
}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

Matrix Matrix::from_columns(const RingPtr& ring, std::size_t rows,
                            const std::vector<ModuleElement>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw RankMismatch("matrix column has wrong rank");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_vec(const ModuleElement& v, std::size_t rows, std::size_t cols) {
  if (v.rank() != rows * cols) throw RankMismatch("from_vec: rank does not match shape");
  Matrix m(v.ring(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

ModuleElement Matrix::column(std::size_t j) const {
  ModuleElement c(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<ModuleElement> Matrix::columns() const {
  std::vector<ModuleElement> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

ModuleElement Matrix::vec() const {
  ModuleElement v(ring_, rows_ * cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) v[j * rows_ + i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

Matrix Matrix::scaled(const Polynomial& f) const {
  Matrix r = *this;
  for (auto& p : r.data_) p = p * f;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw RankMismatch("matrix product: inner dimensions differ");
  Matrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
  return r;
}

ModuleElement operator*(const Matrix& a, const ModuleElement& v) {
  if (a.cols_ != v.rank()) throw RankMismatch("matrix-vector product: dimensions differ");
  ModuleElement r(a.ring_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw RankMismatch("matrix sum: shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw RankMismatch("matrix difference: shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace germs
