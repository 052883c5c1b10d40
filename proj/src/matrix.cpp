#include "fuchs/matrix.hpp"

#include "fuchs/error.hpp"

#include <utility>

namespace fuchs {

Matrix::Matrix(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), entries_(n * n, FieldElement{0}) {
  if (n == 0 || n > kMaxDim) fail(ErrorKind::TooLarge, "matrix dimension " + std::to_string(n) + " outside 1..64");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement{1});
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, const std::vector<FieldElement>& diag) {
  Matrix m(std::move(field), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (n_ != other.n_ || field_->order() != other.field_->order()) fail(ErrorKind::Mismatch, "matrix shapes or fields differ");
  const Field& f = *field_;
  Matrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const FieldElement a = entries_[i * n_ + k];
      if (a.code == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const FieldElement b = other.entries_[k * n_ + j];
        if (b.code == 0) continue;
        out.entries_[i * n_ + j] = f.add(out.entries_[i * n_ + j], f.mul(a, b));
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return n_ == other.n_ && field_->order() == other.field_->order() && entries_ == other.entries_;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.set(j, i, (*this)(i, j));
  }
  return out;
}

Matrix Matrix::inverse() const {
  const Field& f = *field_;
  Matrix work = *this;
  Matrix inv = identity(field_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && work(pivot, col).code == 0) ++pivot;
    if (pivot == n_) fail(ErrorKind::Singular, "matrix is not invertible");
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(work.entries_[pivot * n_ + j], work.entries_[col * n_ + j]);
        std::swap(inv.entries_[pivot * n_ + j], inv.entries_[col * n_ + j]);
      }
    }
    const FieldElement scale = f.inv(work(col, col));
    for (std::size_t j = 0; j < n_; ++j) {
      work.set(col, j, f.mul(work(col, j), scale));
      inv.set(col, j, f.mul(inv(col, j), scale));
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col) continue;
      const FieldElement factor = work(r, col);
      if (factor.code == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        work.set(r, j, f.sub(work(r, j), f.mul(factor, work(col, j))));
        inv.set(r, j, f.sub(inv(r, j), f.mul(factor, inv(col, j))));
      }
    }
  }
  return inv;
}

FieldElement Matrix::determinant() const {
  const Field& f = *field_;
  Matrix work = *this;
  FieldElement det = f.one();
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && work(pivot, col).code == 0) ++pivot;
    if (pivot == n_) return f.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(work.entries_[pivot * n_ + j], work.entries_[col * n_ + j]);
      det = f.neg(det);
    }
    det = f.mul(det, work(col, col));
    const FieldElement inv_pivot = f.inv(work(col, col));
    for (std::size_t r = col + 1; r < n_; ++r) {
      const FieldElement factor = f.mul(work(r, col), inv_pivot);
      if (factor.code == 0) continue;
      for (std::size_t j = col; j < n_; ++j) work.set(r, j, f.sub(work(r, j), f.mul(factor, work(col, j))));
    }
  }
  return det;
}

Matrix Matrix::pow(std::uint64_t exponent) const {
  Matrix result = identity(field_, n_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j).code != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

std::string Matrix::format() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += field_->format((*this)(i, j));
    }
  }
  return out + "]";
}

std::uint64_t matrix_order(const Matrix& m, std::uint64_t cap) {
  if (m.determinant().code == 0) fail(ErrorKind::Singular, "matrix order of a singular matrix");
  Matrix power = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  fail(ErrorKind::OrderExceedsCap, "order exceeds " + std::to_string(cap));
}

}  // namespace fuchs
