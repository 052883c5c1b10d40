#pragma once

#include "fuchs/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuchs {

enum class ClassicalFamily { GL, Sp, O };

// Unipotent class by Jordan block multiplicities: mult[i-1] = number of blocks J_i.
struct JordanType {
  ClassicalFamily family = ClassicalFamily::GL;
  std::vector<int> mult;

  int dimension() const;
  bool is_identity() const;
  std::vector<int> partition() const;  // descending block sizes
  std::string to_string() const;       // "3,1,1"; "-" for the empty type
  bool operator==(const JordanType&) const = default;
};

JordanType jordan_from_partition(ClassicalFamily family, const std::vector<int>& parts);
// Sp: odd sizes have even multiplicity; O: even sizes have even multiplicity.
bool parity_ok(const JordanType& t);
std::int64_t dim_cent_unipotent(const JordanType& t);
// Partitions of n, each descending, in descending lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);
std::vector<JordanType> unipotent_types(ClassicalFamily family, int dim);

enum class Ambient { GL, SL, Sp, SO };

struct LeviShape {
  Ambient ambient = Ambient::GL;
  int dim = 0;  // natural-module dimension
  std::vector<int> gl_blocks;
  int tail = 0;  // natural dimension of the Sp/SO factor
  bool operator==(const LeviShape&) const = default;
};

LeviShape make_levi(Ambient ambient, int dim, std::vector<int> gl_blocks, int tail);
// `GL(8):2,2,2,2`, `SL(4):2,2`, `Sp(8):gl=2,2;tail=0`, `SO(14):gl=4;tail=6`.
LeviShape parse_levi(std::string_view text);
std::string to_string(const LeviShape& shape);
std::string ambient_name(Ambient ambient);

std::int64_t ambient_dimension(Ambient ambient, int dim);
std::int64_t levi_dimension(const LeviShape& shape);
bool is_torus(const LeviShape& shape);
// Every Levi shape of the ambient with blocks listed in descending order; GL/SL shapes are partitions of dim.
std::vector<LeviShape> all_levi_shapes(Ambient ambient, int dim);

// One type per GL block (family GL), then the tail type for Sp/SO ambients.
using LeviUnipotent = std::vector<JordanType>;

std::vector<LeviUnipotent> levi_unipotent_classes(const LeviShape& shape, std::uint64_t cap = 10'000'000);
JordanType fuse_to_ambient(const LeviShape& shape, const LeviUnipotent& u);
std::int64_t levi_orbit_dimension(const LeviShape& shape, const LeviUnipotent& u);
std::int64_t ambient_orbit_dimension(const LeviShape& shape, const JordanType& fused);

struct AlphaResult {
  Rational value;
  LeviUnipotent witness;  // empty for tori
  std::optional<JordanType> ambient;
  std::int64_t levi_orbit_dim = 0;
  std::int64_t ambient_orbit_dim = 0;
  std::string witness_string() const;
};

AlphaResult alpha(const LeviShape& shape, std::uint64_t cap = 10'000'000);
Rational alpha_bound_classical(const LeviShape& shape);
// Max over non-central diagonal eigenvalue patterns of dim s^L / dim s^G, GL/SL ambients only.
Rational alpha_semisimple_bound_gl(const LeviShape& shape, std::uint64_t cap = 10'000'000);

enum class JmFamily { GL, SL, Sp, SO };

struct JmResult {
  std::int64_t jm = 0;
  LeviShape shape;  // centralizer shape achieving the minimum
  std::int64_t levi_dim = 0;
};

// dim of {x : x^m = 1}: dim G minus the least centralizer dimension; dim is the natural-module dimension.
JmResult dim_Jm(JmFamily family, int dim, std::uint64_t m);

}  // namespace fuchs
