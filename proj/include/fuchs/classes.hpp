#pragma once

#include "fuchs/group.hpp"

#include <cstdint>
#include <vector>

namespace fuchs {

struct ConjugacyClass {
  ElementId representative = 0;  // least member id
  std::vector<ElementId> members;
  std::uint64_t size = 0;
  std::uint32_t element_order = 1;
};

struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;
  std::uint32_t exponent = 1;
  // power_maps[k][i] = class of rep_i^k for 0 <= k < exponent.
  std::vector<std::vector<std::uint32_t>> power_maps;
  std::vector<std::uint32_t> inverse_class;

  std::size_t size() const { return classes.size(); }
  std::uint32_t power_class(std::uint32_t cls, std::uint64_t k) const { return power_maps[k % exponent][cls]; }
};

// Classes ordered by element order, then size, then least representative; class 0 is the identity.
ClassData conjugacy_classes(const GroupTable& group);

// #{(x, y) in C_i x C_j : xy = z_k} for the representative z_k.
std::uint64_t structure_constant(const GroupTable& group, const ClassData& classes, std::size_t i, std::size_t j, std::size_t k);

// Entry (i*r + j)*r + k holds a_ijk, r = number of classes.
std::vector<std::uint64_t> structure_tensor(const GroupTable& group, const ClassData& classes);

std::uint64_t centralizer_order(const GroupTable& group, const GroupElement& x);
std::uint64_t centralizer_order(const GroupTable& group, ElementId x);

}  // namespace fuchs
