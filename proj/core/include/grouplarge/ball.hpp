#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grouplarge/defs.hpp"
#include "grouplarge/word.hpp"

namespace grouplarge {

// Closed-form number of freely reduced words of length <= radius:
// 1 + sum_{l=1..radius} 2n(2n-1)^(l-1).  Saturates at UINT64_MAX.
std::uint64_t ball_size(int rank, int radius);

// Streams every reduced word of length <= radius exactly once, in
// length-then-lexicographic order (bases ascending, + before -).
void for_each_in_ball(const Alphabet& alphabet, int radius,
                      const std::function<void(const Word&)>& fn,
                      std::uint64_t limit = kDefaultDomainLimit);

// Materialized ball in enumeration order.
std::vector<Word> enumerate_ball(const Alphabet& alphabet, int radius,
                                 std::uint64_t limit = kDefaultDomainLimit);

}  // namespace grouplarge
