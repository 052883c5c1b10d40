#include "fuchs/field.hpp"

#include "fuchs/error.hpp"
#include "fuchs/numeric.hpp"

namespace fuchs {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of num modulo the monic den, over F_p.
Poly poly_rem(Poly num, const Poly& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd && !num.empty()) {
    const std::uint32_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + static_cast<std::uint64_t>(p - lead) * den[i]) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

bool poly_is_zero(const Poly& poly) {
  for (auto c : poly) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Enumerate monic divisors of degree d by their p^d low coefficients.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly cand(d + 1, 0);
    cand[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_is_zero(poly_rem(poly, cand, p))) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t a) : p_(p), a_(a), q_(1) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p));
  if (a < 1) fail(ErrorKind::TooLarge, "extension degree must be positive");
  for (std::uint32_t i = 0; i < a; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) fail(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(a) + " exceeds 2^31");
  }
  modulus_.assign(a + 1, 0);
  modulus_[a] = 1;
  if (a == 1) {
    modulus_[0] = 0;
  } else {
    // Lexicographically least by the code sum c_i p^i of the non-leading coefficients.
    std::uint64_t tail = 1;
    for (std::uint32_t i = 0; i < a; ++i) tail *= p;
    bool found = false;
    for (std::uint64_t code = 0; code < tail && !found; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < a; ++i) {
        modulus_[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      found = is_irreducible(modulus_, p);
    }
    if (!found) fail(ErrorKind::NotPrime, "no irreducible polynomial found");
  }
  const auto factors = prime_divisors(q_ - 1);
  auto is_generator = [&](FieldElement x) {
    if (x.code == 0) return false;
    if (pow(x, static_cast<std::int64_t>(q_ - 1)) != one()) return false;
    for (auto r : factors) {
      if (pow(x, static_cast<std::int64_t>((q_ - 1) / r)) == one()) return false;
    }
    return true;
  };
  generator_ = {1};
  for (std::uint64_t code = 1; code < q_; ++code) {
    if (is_generator({static_cast<std::uint32_t>(code)})) {
      generator_ = {static_cast<std::uint32_t>(code)};
      break;
    }
  }
  if (a > 1 && q_ <= (1U << 16)) {
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    FieldElement x = one();
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x.code;
      exp_[i + q_ - 1] = x.code;
      log_[x.code] = static_cast<std::uint32_t>(i);
      x = mul_poly(x, generator_);
    }
  }
}

std::string Field::name() const {
  return "F" + std::to_string(q_);
}

FieldElement Field::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > a_) fail(ErrorKind::Mismatch, "too many coefficients for " + name());
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + (c[i] % p_);
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> out(a_);
  std::uint32_t c = x.code;
  for (std::uint32_t i = 0; i < a_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
  if (a_ == 1) {
    const std::uint64_t s = std::uint64_t{x.code} + y.code;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  std::uint64_t code = 0, place = 1;
  std::uint32_t cx = x.code, cy = y.code;
  for (std::uint32_t i = 0; i < a_; ++i) {
    code += ((cx % p_ + cy % p_) % p_) * place;
    cx /= p_;
    cy /= p_;
    place *= p_;
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::neg(FieldElement x) const {
  if (a_ == 1) return {x.code == 0 ? 0 : p_ - x.code};
  std::uint64_t code = 0, place = 1;
  std::uint32_t cx = x.code;
  for (std::uint32_t i = 0; i < a_; ++i) {
    code += ((p_ - cx % p_) % p_) * place;
    cx /= p_;
    place *= p_;
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::mul_poly(FieldElement x, FieldElement y) const {
  const Poly cx = coeffs(x), cy = coeffs(y);
  Poly prod(2 * a_ - 1, 0);
  for (std::uint32_t i = 0; i < a_; ++i) {
    if (cx[i] == 0) continue;
    for (std::uint32_t j = 0; j < a_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(cx[i]) * cy[j]) % p_);
    }
  }
  return from_coeffs(poly_rem(prod, modulus_, p_));
}

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  if (a_ == 1) return {static_cast<std::uint32_t>(mulmod(x.code, y.code, p_))};
  if (x.code == 0 || y.code == 0) return zero();
  if (!exp_.empty()) return {exp_[log_[x.code] + log_[y.code]]};
  return mul_poly(x, y);
}

FieldElement Field::inv(FieldElement x) const {
  if (x.code == 0) fail(ErrorKind::Singular, "inverse of zero in " + name());
  if (a_ == 1) return {static_cast<std::uint32_t>(invmod(x.code, p_))};
  if (!exp_.empty()) return {exp_[(q_ - 1 - log_[x.code]) % (q_ - 1)]};
  return pow(x, static_cast<std::int64_t>(q_ - 2));
}

FieldElement Field::pow(FieldElement x, std::int64_t exponent) const {
  if (exponent < 0) {
    x = inv(x);
    exponent = -exponent;
  }
  FieldElement result = one();
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, x);
    exponent >>= 1;
    if (exponent > 0) x = mul(x, x);
  }
  return result;
}

std::uint64_t Field::multiplicative_order(FieldElement x) const {
  if (x.code == 0) fail(ErrorKind::Singular, "zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (auto r : prime_divisors(q_ - 1)) {
    while (order % r == 0 && pow(x, static_cast<std::int64_t>(order / r)) == one()) order /= r;
  }
  return order;
}

std::string Field::format(FieldElement x) const {
  if (a_ == 1) return std::to_string(x.code);
  const auto c = coeffs(x);
  std::string out = "[";
  for (std::uint32_t i = 0; i < a_; ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

FieldPtr field_make(std::uint32_t p, std::uint32_t a) { return std::make_shared<const Field>(p, a); }

FieldElement root_of_unity(const Field& field, std::uint64_t m) {
  const std::uint64_t q1 = field.order() - 1;
  if (m == 0 || q1 % m != 0) {
    fail(ErrorKind::NoSuchRoot, std::to_string(m) + " does not divide " + std::to_string(q1));
  }
  return field.pow(field.generator(), static_cast<std::int64_t>(q1 / m));
}

}  // namespace fuchs
