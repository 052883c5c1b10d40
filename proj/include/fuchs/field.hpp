#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fuchs {

// Encoded as sum c_i p^i over the coefficient vector, which is canonical.
struct FieldElement {
  std::uint32_t code = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  Field(std::uint32_t p, std::uint32_t a);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return a_; }
  std::uint64_t order() const { return q_; }
  // Monic, low degree first, length a+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }
  std::string name() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  FieldElement pow(FieldElement x, std::int64_t exponent) const;

  std::uint64_t multiplicative_order(FieldElement x) const;
  std::string format(FieldElement x) const;

 private:
  FieldElement mul_poly(FieldElement x, FieldElement y) const;

  std::uint32_t p_;
  std::uint32_t a_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_;
  // Discrete log tables for small extension fields; exp_ has length 2(q-1).
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr field_make(std::uint32_t p, std::uint32_t a = 1);
FieldElement root_of_unity(const Field& field, std::uint64_t m);

// True iff the monic polynomial (low degree first) over F_p has no monic factor of degree 1..deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace fuchs
