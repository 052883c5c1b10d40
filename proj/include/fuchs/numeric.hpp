#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fuchs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);
double to_double(const Rational& value);

BigInt numerator_of(const Rational& value);
BigInt denominator_of(const Rational& value);
bool is_integer(const Rational& value);
BigInt pow_big(const BigInt& base, std::uint64_t exponent);
BigInt factorial(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Arithmetic modulo p < 2^32; products stay within 64 bits.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint64_t n);
// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
// Least primitive root modulo an odd prime p.
std::uint64_t primitive_root(std::uint64_t p);
// Returns (p, a) when n = p^a with p prime, else (0, 0).
std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t n);

// Least nonnegative residue of a BigInt.
std::uint64_t reduce_mod(const BigInt& value, std::uint64_t p);

}  // namespace fuchs
