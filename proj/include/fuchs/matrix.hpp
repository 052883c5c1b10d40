#pragma once

#include "fuchs/field.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fuchs {

class Matrix {
 public:
  static constexpr std::size_t kMaxDim = 64;

  Matrix(FieldPtr field, std::size_t n);
  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix diagonal(FieldPtr field, const std::vector<FieldElement>& diag);

  std::size_t dim() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  FieldElement operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, FieldElement value) { entries_[i * n_ + j] = value; }
  const std::vector<FieldElement>& entries() const { return entries_; }

  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

  Matrix transpose() const;
  Matrix inverse() const;
  FieldElement determinant() const;
  Matrix pow(std::uint64_t exponent) const;
  bool is_identity() const;
  std::string format() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<FieldElement> entries_;
};

// Least k >= 1 with M^k = I.
std::uint64_t matrix_order(const Matrix& m, std::uint64_t cap);

}  // namespace fuchs
