#include "grouplarge/hom.hpp"

#include "grouplarge/errors.hpp"

namespace grouplarge {

GeneratorMap::GeneratorMap(Alphabet src, Alphabet tgt, std::vector<Word> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (static_cast<int>(images.size()) != source.rank())
    throw Error(Error::Code::InvalidArgument, "need one image per source generator");
  for (const Word& w : images)
    if (w.rank() != target.rank())
      throw Error(Error::Code::AlphabetMismatch, "generator image over wrong alphabet");
}

Word eval_hom(const GeneratorMap& map, const Word& g) {
  if (g.rank() != map.source.rank())
    throw Error(Error::Code::AlphabetMismatch, "word not over the source alphabet");
  std::vector<Letter> letters;
  for (Letter l : g.letters()) {
    const Word& image = map.images[l.base];
    if (l.sign > 0) {
      letters.insert(letters.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        letters.push_back(inverse(*it));
    }
  }
  return Word::reduce(map.target.rank(), letters);
}

}  // namespace grouplarge
