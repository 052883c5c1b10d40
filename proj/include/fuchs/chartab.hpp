#pragma once

#include "fuchs/classes.hpp"
#include "fuchs/group.hpp"
#include "fuchs/numeric.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuchs {

struct ModularTable {
  std::uint64_t prime = 0;
  std::uint64_t omega = 1;  // order exactly exponent mod prime
  std::uint32_t exponent = 1;
  std::vector<std::vector<std::uint64_t>> values;  // [character][class]
  std::vector<std::uint64_t> degrees;
};

struct ClassSummary {
  std::uint64_t size = 0;
  std::uint32_t order = 1;
  std::uint32_t inverse = 0;
  std::uint32_t square = 0;
  std::string representative;
  bool operator==(const ClassSummary&) const = default;
};

struct CharacterTable {
  std::string group_spec;
  std::uint64_t group_order = 0;
  std::uint32_t exponent = 1;
  std::uint64_t dixon_prime = 0;
  std::vector<ClassSummary> classes;
  std::vector<std::uint64_t> degrees;
  std::vector<int> indicators;
  // multiplicities[r][c][j]: multiplicity of zeta_e^j as an eigenvalue of rho_r(c).
  std::vector<std::vector<std::vector<std::uint32_t>>> multiplicities;

  std::size_t num_characters() const { return degrees.size(); }
  std::size_t num_classes() const { return classes.size(); }
  bool operator==(const CharacterTable&) const = default;
};

// Least p = 1 mod e with p^2 > 4|G| and p not dividing |G|; skip selects later primes.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint32_t exponent, std::size_t skip = 0);
// Element of order exactly e mod p, from the least primitive root.
std::uint64_t unity_root_mod(std::uint64_t p, std::uint32_t e);

ModularTable dixon_modular(const GroupTable& group, const ClassData& classes, const std::vector<std::uint64_t>& tensor,
                           std::uint64_t prime);
bool modular_orthogonality_holds(const ModularTable& table, const ClassData& classes, std::uint64_t group_order);

CharacterTable character_table(const GroupTable& group, const ClassData& classes, std::size_t prime_skip = 0);
CharacterTable character_table_from_modular(const GroupTable& group, const ClassData& classes, const ModularTable& modular);

// Phi_e, low degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t e);
// Remainder of sum v_j x^j modulo Phi_e.
std::vector<BigInt> reduce_cyclotomic(std::vector<BigInt> v, std::uint32_t e);

int schur_indicator(const CharacterTable& table, std::size_t r);
int compute_schur_indicator(const CharacterTable& table, std::size_t r);

std::complex<double> numeric_value(const CharacterTable& table, std::size_t r, std::size_t c);
std::uint64_t value_mod(const CharacterTable& table, std::size_t r, std::size_t c, std::uint64_t p, std::uint64_t omega);
// Largest relative deviation over row and column orthogonality relations.
double orthogonality_error(const CharacterTable& table);

double zeta(const CharacterTable& table, const Rational& s);
double zeta0(const CharacterTable& table, const Rational& s);
// Exact values for nonnegative integer s, otherwise nullopt.
std::optional<Rational> zeta_exact(const CharacterTable& table, const Rational& s);
std::optional<Rational> zeta0_exact(const CharacterTable& table, const Rational& s);

struct RatioEntry {
  std::size_t character = 0;
  std::uint64_t degree = 0;
  double magnitude = 0;
  // nullopt for linear characters; -infinity when the value vanishes.
  std::optional<double> exponent;
};

struct RatioReport {
  std::size_t class_index = 0;
  std::vector<RatioEntry> entries;
  std::optional<double> max_exponent;  // over degrees > 1
};

RatioReport ratio_exponent_report(const CharacterTable& table, std::size_t class_index);

}  // namespace fuchs
