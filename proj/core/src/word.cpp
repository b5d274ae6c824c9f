#include "grouplarge/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "grouplarge/errors.hpp"

namespace grouplarge {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  bool all_digits = true;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == '-') return false;
    if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
  }
  return !all_digits;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(Error::Code::InvalidArgument, "alphabet rank must be >= 1");
  if (names_.size() > 255) throw Error(Error::Code::InvalidArgument, "alphabet rank above 255");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw Error(Error::Code::InvalidArgument, "invalid generator name '" + names_[i] + "'");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error(Error::Code::InvalidArgument, "duplicate generator name '" + names_[i] + "'");
  }
}

Alphabet Alphabet::of_rank(int rank) {
  if (rank < 1) throw Error(Error::Code::InvalidArgument, "alphabet rank must be >= 1");
  std::vector<std::string> names;
  if (rank <= 4) {
    const char* small[] = {"a", "b", "c", "d"};
    for (int i = 0; i < rank; ++i) names.emplace_back(small[i]);
  } else {
    for (int i = 0; i < rank; ++i) names.push_back("g" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

Alphabet Alphabet::paired(int pairs) {
  if (pairs < 1) throw Error(Error::Code::InvalidArgument, "need at least one pair");
  std::vector<std::string> names;
  for (int i = 0; i < pairs; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Word Word::reduce(int rank, std::span<const Letter> letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.base >= rank)
      throw Error(Error::Code::AlphabetMismatch, "letter base out of range for rank");
    if (!w.letters_.empty() && w.letters_.back().base == l.base &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int rank, int base, int sign) {
  Letter l{static_cast<std::uint8_t>(base), static_cast<std::int8_t>(sign)};
  return reduce(rank, std::span<const Letter>(&l, 1));
}

Word Word::power(int rank, int base, int exponent) {
  std::vector<Letter> ls(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent),
                         Letter{static_cast<std::uint8_t>(base),
                                static_cast<std::int8_t>(exponent < 0 ? -1 : 1)});
  return reduce(rank, ls);
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(grouplarge::inverse(*it));
  return w;
}

int Word::boundary_base(Side side) const {
  if (is_identity())
    throw Error(Error::Code::IdentityHasNoBoundary, "identity has no boundary letter");
  return side == Side::Left ? letters_.front().base : letters_.back().base;
}

Syllable Word::boundary_syllable(Side side) const {
  if (is_identity())
    throw Error(Error::Code::IdentityHasNoBoundary, "identity has no boundary syllable");
  if (side == Side::Left) {
    const Letter first = letters_.front();
    int run = 0;
    while (run < static_cast<int>(letters_.size()) && letters_[run].base == first.base) ++run;
    return {first.base, run * first.sign};
  }
  const Letter last = letters_.back();
  int run = 0;
  while (run < static_cast<int>(letters_.size()) &&
         letters_[letters_.size() - 1 - run].base == last.base)
    ++run;
  return {last.base, run * last.sign};
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (auto c = letters_[i].key() <=> other.letters_[i].key(); c != 0) return c;
  return rank_ <=> other.rank_;
}

Word mul(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw Error(Error::Code::AlphabetMismatch, "words over different alphabets");
  std::vector<Letter> ls;
  ls.reserve(u.size() + v.size());
  ls.insert(ls.end(), u.letters().begin(), u.letters().end());
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(u.rank(), ls);
}

std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> out;
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back().base == l.base) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.base, l.sign});
    }
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw Error(Error::Code::EmptyInput, "empty word text");
  if (tokens.size() == 1 && tokens[0] == "e" && alphabet.index_of("e") < 0)
    return Word(alphabet.rank());

  std::vector<Letter> letters;
  for (const std::string& tok : tokens) {
    std::string name = tok;
    long long exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (ec != std::errc() || ptr != exp.data() + exp.size())
        throw Error(Error::Code::MalformedExponent, "malformed exponent in '" + tok + "'");
      if (exponent == 0)
        throw Error(Error::Code::MalformedExponent, "zero exponent in '" + tok + "'");
    }
    int base = alphabet.index_of(name);
    if (base < 0) throw Error(Error::Code::UnknownGenerator, "unknown generator '" + tok + "'");
    std::int8_t sign = exponent < 0 ? -1 : 1;
    for (long long i = 0, n = exponent < 0 ? -exponent : exponent; i < n; ++i)
      letters.push_back({static_cast<std::uint8_t>(base), sign});
  }
  return Word::reduce(alphabet.rank(), letters);
}

std::string print_word(const Word& w, const Alphabet& alphabet) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Syllable& s : syllables(w)) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(s.base);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace grouplarge
