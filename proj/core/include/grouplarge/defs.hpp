#pragma once

#include <cstdint>

namespace grouplarge {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

inline constexpr const char* kToolVersion = "0.1.0";

// Guard on the size of any enumerated verification domain.
inline constexpr std::uint64_t kDefaultDomainLimit = 50'000'000;

}  // namespace grouplarge
