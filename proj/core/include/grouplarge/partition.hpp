#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grouplarge/defs.hpp"
#include "grouplarge/word.hpp"

namespace grouplarge {

enum class ReadingVariant { Literal, Corrected };

inline const char* variant_name(ReadingVariant v) {
  return v == ReadingVariant::Literal ? "literal" : "corrected";
}

enum class CellTag { Letter, Pair, Syllable, Filtration, Remainder };

// Index of one cell of a partition: a generator, a generator pair, a
// syllable length m >= 1, or a filtration level.
struct CellId {
  CellTag tag;
  int index = 0;

  bool operator==(const CellId&) const = default;
  auto operator<=>(const CellId&) const = default;
};

std::string cell_name(const CellId& cell);

// A total cell assignment on words together with the raw per-cell
// predicates and declared witness sets of the underlying construction.
//
// Witness sets use the G = F.A convention: a left witness F certifies
// coverage via f^-1 g, a right witness via g f^-1.
struct PartitionScheme {
  explicit PartitionScheme(Alphabet a) : alphabet(std::move(a)) {}

  std::string kind;
  Alphabet alphabet;
  ReadingVariant variant = ReadingVariant::Corrected;

  // Cells materialized for reports; membership logic is not bounded by this.
  std::vector<CellId> report_cells;
  CellId completion_cell;

  // Total assignment (after the completion rule).
  std::function<CellId(const Word&)> cell_of;

  bool left_claimed = false;
  bool right_claimed = false;

  // Membership in the raw paper cell for the given side (L/R families for
  // two-sided constructions, the single family otherwise).
  std::function<bool(const CellId&, Side, const Word&)> raw_member;

  // Predicate whose largeness the construction claims on that side.  For
  // most constructions this is raw_member; the paired construction claims
  // largeness of the whole cell L u R.
  std::function<bool(const CellId&, Side, const Word&)> coverage_member;

  // Declared witness F for (cell, side); only valid for claimed sides.
  std::function<std::vector<Word>(const CellId&, Side)> witness;

  std::map<std::string, std::string> params;

  std::vector<Side> claimed_sides() const {
    std::vector<Side> s;
    if (left_claimed) s.push_back(Side::Left);
    if (right_claimed) s.push_back(Side::Right);
    return s;
  }
};

}  // namespace grouplarge
