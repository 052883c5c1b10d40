#pragma once

#include "fuchs/numeric.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuchs {

// Raw text of the shipped Lie-type data tables.
std::string_view lie_tables_text();
std::string data_version();

struct StoredAlpha {
  std::string label;
  Rational value;
  std::string kind;  // exact | upper_bound | strict_upper_bound
};

// Types E8, E7, E6, F4, G2 and D7.
StoredAlpha alpha_exceptional(std::string_view type, std::string_view label);
std::vector<StoredAlpha> alpha_table(std::string_view type);

bool is_exceptional_type(std::string_view type);
// Lower bound for dim J_m; needs m >= 7 with gcd(m, 30) = 1.
std::int64_t exceptional_jm_lower(std::string_view type, std::uint64_t m);
int coxeter_number(std::string_view type);
std::int64_t exceptional_dimension(std::string_view type);

// Bad primes by type letter ("A7" -> A) or exceptional name.
std::vector<std::uint64_t> bad_primes(std::string_view type);
// Largest excess over the J_m prediction for a small classical type; 0 when no row applies.
int delta_max(std::string_view type, const std::vector<std::uint64_t>& periods);

}  // namespace fuchs
