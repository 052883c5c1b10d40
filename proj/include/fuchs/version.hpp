#pragma once

namespace fuchs {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace fuchs
