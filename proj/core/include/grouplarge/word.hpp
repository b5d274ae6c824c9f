#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouplarge/defs.hpp"

namespace grouplarge {

// Finite ranked alphabet of free-group generators.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  // Generic names: a,b,c,d for small ranks, g0,g1,... beyond that.
  static Alphabet of_rank(int rank);
  // Alternating pair names x0,y0,x1,y1,... (rank = 2 * pairs).
  static Alphabet paired(int pairs);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  // -1 if the token is not a generator name.
  int index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

// A single generator occurrence, a or a^-1.
struct Letter {
  std::uint8_t base;
  std::int8_t sign;  // +1 or -1

  bool operator==(const Letter&) const = default;
  // Enumeration/lexicographic key: bases ascending, + before -.
  int key() const { return base * 2 + (sign < 0 ? 1 : 0); }
};

inline Letter inverse(Letter l) { return {l.base, static_cast<std::int8_t>(-l.sign)}; }

// Maximal run a^exponent of one generator; exponent is signed and nonzero.
struct Syllable {
  int base;
  int exponent;

  bool operator==(const Syllable&) const = default;
  int abs_exponent() const { return exponent < 0 ? -exponent : exponent; }
};

// A freely reduced word; the empty word is the identity.
class Word {
 public:
  explicit Word(int rank) : rank_(rank) {}

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(int rank, std::span<const Letter> letters);
  static Word generator(int rank, int base, int sign = 1);
  // base^exponent (identity when exponent is 0).
  static Word power(int rank, int base, int exponent);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;

  // Base of the first (last) letter, sign ignored; throws for the identity.
  int boundary_base(Side side) const;
  // Maximal first (last) syllable; throws for the identity.
  Syllable boundary_syllable(Side side) const;

  bool operator==(const Word&) const = default;
  // Length-then-lexicographic, the enumeration order of balls.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

Word mul(const Word& u, const Word& v);

std::vector<Syllable> syllables(const Word& w);

// Text format: whitespace-separated `name` or `name^k` tokens; `e` alone is the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string print_word(const Word& w, const Alphabet& alphabet);

}  // namespace grouplarge
