#pragma once

#include <vector>

#include "grouplarge/word.hpp"

namespace grouplarge {

// A homomorphism given by generator images.
struct GeneratorMap {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;  // one word over target per source generator

  GeneratorMap(Alphabet src, Alphabet tgt, std::vector<Word> imgs);
};

Word eval_hom(const GeneratorMap& map, const Word& g);

}  // namespace grouplarge
