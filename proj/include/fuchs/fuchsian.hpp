#pragma once

#include "fuchs/numeric.hpp"
#include "fuchs/signature.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuchs {

Rational measure(const FuchsianSignature& sig);

struct Validation {
  bool valid = false;
  std::vector<std::string> reasons;
};

// Valid iff measure > 0 and vg + d >= 3.
Validation validate(const FuchsianSignature& sig);

struct ThresholdSet {
  Rational mu, t, nu, sigma1, sigma2, sigma3, N1;
  std::optional<Rational> N2, N3, N4, N5;
  // Why an optional threshold is absent, keyed by its name.
  std::map<std::string, std::string> missing;
};

// Throws HypothesisFailed for signatures that are not Fuchsian.
ThresholdSet thresholds(const FuchsianSignature& sig);

enum class Congruence { ModM, Mod2M };

// Ascending prime powers q = 1 mod lcm(m) (or 2 lcm(m)) whose characteristic avoids the periods
// and, when type is given, the bad primes of that type.
std::vector<std::uint64_t> q_admissible(const std::vector<std::uint64_t>& periods, Congruence variant, std::size_t count,
                                        std::optional<std::string_view> type = std::nullopt);

struct DimInterval {
  Rational lower;
  std::optional<Rational> upper;  // absent for one-sided estimates
  std::optional<Rational> c_min, c_max;
  std::string note;
};

DimInterval dim_interval_gl(const FuchsianSignature& sig, std::uint64_t n);

// Series of rank-n classical groups: Sp_2n, SO_{2n+1}, SO_{2n+2}.
enum class ClassicalSeries { Sp, SOOdd, SOEven };
ClassicalSeries parse_series(std::string_view text);
std::string series_name(ClassicalSeries s);
std::int64_t series_dimension(ClassicalSeries s, std::uint64_t n);

DimInterval dim_interval_classical(const FuchsianSignature& sig, ClassicalSeries series, std::uint64_t n);

enum class JSource { StoredLower, UserTable };

struct DimHomReport {
  std::string type;
  std::int64_t group_dimension = 0;
  std::int64_t low = 0;
  std::int64_t high = 0;
  std::vector<std::int64_t> jm;  // per period
  std::string mode;  // exact | interval | lower_bound
};

// Types E8 E7 E6 F4 G2, A1..A7, B2..B4, C2..C3, D4..D7.
DimHomReport dim_hom_exceptional(const FuchsianSignature& sig, std::string_view type, JSource source = JSource::StoredLower,
                                 const std::map<std::uint64_t, std::int64_t>& user_table = {});

enum class BoundFamily { GL, SL, Sp, SOOdd, SOEven };
BoundFamily parse_bound_family(std::string_view text);
std::string bound_family_name(BoundFamily f);

struct BoundExponents {
  Rational lower_exponent;
  Rational upper_exponent;
  std::vector<std::pair<std::string, bool>> hypotheses;
};

BoundExponents bound_exponents(const FuchsianSignature& sig, BoundFamily family, std::uint64_t n);

}  // namespace fuchs
