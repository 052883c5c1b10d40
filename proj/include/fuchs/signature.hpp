#pragma once

#include "fuchs/numeric.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fuchs {

struct FuchsianSignature {
  int v = 2;  // 2 oriented, 1 non-oriented
  std::uint64_t genus = 0;
  std::vector<std::uint64_t> periods;

  std::size_t d() const { return periods.size(); }
  // vg, the number of surface generators.
  std::uint64_t surface_rank() const { return static_cast<std::uint64_t>(v) * genus; }
  bool operator==(const FuchsianSignature&) const = default;
};

// `o:g=0:m=2,3,7` or `n:g=1:m=3,3`; the m-part may be omitted or empty.
FuchsianSignature parse_signature(std::string_view text);
std::string to_string(const FuchsianSignature& sig);
// Structural checks only: v in {1,2}, v=1 needs g >= 1, all periods >= 2.
void check_signature_fields(const FuchsianSignature& sig);

}  // namespace fuchs
