#pragma once

#include "fuchs/chartab.hpp"
#include "fuchs/classes.hpp"
#include "fuchs/group.hpp"
#include "fuchs/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuchs {

using ClassTuple = std::vector<std::size_t>;

struct FormulaOptions {
  bool exact_orders = false;    // total mode: element orders equal m_i instead of dividing it
  std::size_t prime_offset = 0;  // skip this many CRT primes, for disjoint-prime rechecks
  std::size_t max_rounds = 6;    // extra-prime retries before BoundOverflow
};

// Character-sum count of homomorphisms sending x_i into the class tup[i].
BigInt hom_count_classes(const FuchsianSignature& sig, const CharacterTable& table, const ClassTuple& tup,
                         const FormulaOptions& options = {});
// Sum over class tuples whose orders divide (or equal) the m_i, evaluated in factored form.
BigInt hom_count_total(const FuchsianSignature& sig, const CharacterTable& table, const FormulaOptions& options = {});
// The same total as an explicit sum of hom_count_classes over tuples.
BigInt hom_count_total_by_tuples(const FuchsianSignature& sig, const CharacterTable& table, const FormulaOptions& options = {});

struct OracleOptions {
  std::optional<ClassTuple> classes;
  bool exact_orders = false;
  unsigned threads = 1;
  std::uint64_t cost_cap = 100'000'000;
};

// Number of relator-solving tuples the oracle would visit.
BigInt oracle_cost(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes, const OracleOptions& options = {});
BigInt oracle_hom_count(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes,
                        const OracleOptions& options = {});

struct EpiResult {
  BigInt epi;
  BigInt hom;
  Rational probability;
};

EpiResult epi_count(const FuchsianSignature& sig, const GroupTable& group, const ClassData& classes, const OracleOptions& options = {});

enum class CountMode { Classes, Total, Epi };
enum class CountMethod { Formula, Oracle, Both };

struct HomCountReport {
  FuchsianSignature signature;
  std::string group;
  CountMode mode = CountMode::Total;
  BigInt count;
  CountMethod method = CountMethod::Formula;
  std::optional<bool> crosscheck;  // set when method is Both
  std::optional<BigInt> oracle_count;
  std::optional<double> elapsed_ms;
};

std::string mode_name(CountMode mode);
std::string method_name(CountMethod method);

}  // namespace fuchs
