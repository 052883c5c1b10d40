#pragma once

#include "fuchs/classes.hpp"
#include "fuchs/field.hpp"
#include "fuchs/group.hpp"
#include "fuchs/levi.hpp"
#include "fuchs/matrix.hpp"
#include "fuchs/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuchs {

// Exact orders of finite classical groups over F_q; SO is the split form for even dimension.
BigInt order_gl_q(std::uint64_t n, std::uint64_t q);
BigInt order_sp_q(std::uint64_t dim, std::uint64_t q);
BigInt order_so_q(std::uint64_t dim, std::uint64_t q);
BigInt classical_order(Ambient family, std::uint64_t dim, std::uint64_t q);
std::int64_t algebraic_dimension(Ambient family, std::uint64_t dim);

struct ConstructedElement {
  Ambient family = Ambient::GL;
  int dim = 0;  // natural-module dimension
  std::uint64_t m = 1;
  Matrix matrix;
  // Exponents j of the diagonal entries zeta^j for a fixed primitive m-th root zeta.
  std::vector<std::uint64_t> exponents;
  // Preserved form for Sp/SO: x^T J x = J.
  std::optional<Matrix> form;
  LeviShape centralizer;
  std::string centralizer_description;
  // GL/SL: order of the centralizer in GL_n(q); Sp/SO: in the isometry group of determinant 1.
  BigInt centralizer_order;
  // SL only: centralizer order inside SL_n(q).
  std::optional<BigInt> centralizer_order_in_sl;
  Rational bound_exponent;  // q-exponent of the class-size lower bound
  bool split_case = false;
};

ConstructedElement construct_element(Ambient family, int dim, std::uint64_t m, const FieldPtr& field);

struct ClassSizeReport {
  bool applicable = false;
  BigInt group_order;
  BigInt centralizer_order;
  BigInt class_size;
  Rational bound_exponent;
  // class_size > q^bound_exponent
  bool exceeds_exponent_bound = false;
  // class_size > |G|^(1-1/m) q^(-m^2/2); equals the exponent comparison for GL/SL.
  bool exceeds_instance_bound = false;
  std::string source;  // "group-scan", "commutant-scan" or "formula"
};

// Centralizer by scanning G; G must contain the element.
ClassSizeReport class_size_check(const ConstructedElement& e, const GroupTable& group);
// Centralizer from the predicted order and the exact group-order formula.
ClassSizeReport class_size_check(const ConstructedElement& e);

// Counts invertible matrices commuting with x (det 1 only if det_one) by enumerating the commutant algebra.
// Returns nullopt when q^(dim commutant) exceeds cap.
std::optional<BigInt> commutant_centralizer_order(const Matrix& x, bool det_one, std::uint64_t cap = 10'000'000);

}  // namespace fuchs
