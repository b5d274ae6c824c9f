#include "grouplarge/partition.hpp"

namespace grouplarge {

std::string cell_name(const CellId& cell) {
  switch (cell.tag) {
    case CellTag::Letter:
      return "letter-" + std::to_string(cell.index);
    case CellTag::Pair:
      return "pair-" + std::to_string(cell.index);
    case CellTag::Syllable:
      return "syllable-" + std::to_string(cell.index);
    case CellTag::Filtration:
      return "level-" + std::to_string(cell.index);
    case CellTag::Remainder:
      return "remainder";
  }
  return "?";
}

}  // namespace grouplarge
