#include "grouplarge/ball.hpp"

#include <limits>

#include "grouplarge/errors.hpp"

namespace grouplarge {

std::uint64_t ball_size(int rank, int radius) {
  if (rank < 1 || radius < 0)
    throw Error(Error::Code::InvalidArgument, "ball needs rank >= 1, radius >= 0");
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 1;
  unsigned __int128 layer = 2 * static_cast<unsigned __int128>(rank);
  for (int l = 1; l <= radius; ++l) {
    total += layer;
    if (total > cap) return std::numeric_limits<std::uint64_t>::max();
    layer *= 2 * static_cast<unsigned __int128>(rank) - 1;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

void extend(std::vector<Letter>& stack, int rank, int target_len,
            const std::function<void(const Word&)>& fn) {
  if (static_cast<int>(stack.size()) == target_len) {
    fn(Word::reduce(rank, stack));
    return;
  }
  for (int base = 0; base < rank; ++base) {
    for (int sign : {+1, -1}) {
      if (!stack.empty() && stack.back().base == base && stack.back().sign == -sign)
        continue;  // would cancel, not reduced
      stack.push_back({static_cast<std::uint8_t>(base), static_cast<std::int8_t>(sign)});
      extend(stack, rank, target_len, fn);
      stack.pop_back();
    }
  }
}

}  // namespace

void for_each_in_ball(const Alphabet& alphabet, int radius,
                      const std::function<void(const Word&)>& fn, std::uint64_t limit) {
  const std::uint64_t count = ball_size(alphabet.rank(), radius);
  if (count > limit)
    throw Error(Error::Code::DomainTooLarge,
                "ball has " + std::to_string(count) + " words, guard limit is " +
                    std::to_string(limit));
  std::vector<Letter> stack;
  stack.reserve(static_cast<std::size_t>(radius));
  for (int len = 0; len <= radius; ++len) extend(stack, alphabet.rank(), len, fn);
}

std::vector<Word> enumerate_ball(const Alphabet& alphabet, int radius, std::uint64_t limit) {
  const std::uint64_t count = ball_size(alphabet.rank(), radius);
  if (count > limit)
    throw Error(Error::Code::DomainTooLarge,
                "ball has " + std::to_string(count) + " words, guard limit is " +
                    std::to_string(limit));
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_in_ball(alphabet, radius, [&](const Word& w) { out.push_back(w); }, limit);
  return out;
}

}  // namespace grouplarge
