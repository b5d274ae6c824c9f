#include <doctest.h>

#include "grouplarge/ball.hpp"
#include "grouplarge/hom.hpp"
#include "helpers.hpp"

using namespace grouplarge;

namespace {

// The retraction F_3 -> F_2 killing c.
GeneratorMap retraction() {
  return GeneratorMap(Alphabet::of_rank(3), Alphabet::of_rank(2),
                      {Word::generator(2, 0), Word::generator(2, 1), Word(2)});
}

}  // namespace

TEST_CASE("generator map validation") {
  CHECK(error_code([] {
          GeneratorMap(Alphabet::of_rank(3), Alphabet::of_rank(2),
                       {Word::generator(2, 0), Word::generator(2, 1)});
        }) == Error::Code::InvalidArgument);
  CHECK(error_code([] {
          GeneratorMap(Alphabet::of_rank(2), Alphabet::of_rank(2),
                       {Word::generator(2, 0), Word::generator(3, 1)});
        }) == Error::Code::AlphabetMismatch);
  CHECK(error_code([] { eval_hom(retraction(), Word(2)); }) == Error::Code::AlphabetMismatch);
}

TEST_CASE("homomorphism evaluation on fixed words") {
  const GeneratorMap r = retraction();
  const Alphabet f3 = Alphabet::of_rank(3);
  const Alphabet f2 = Alphabet::of_rank(2);

  CHECK(eval_hom(r, parse_word("c a c^-1 b", f3)) == parse_word("a b", f2));
  CHECK(eval_hom(r, parse_word("c^5", f3)).is_identity());
  CHECK(eval_hom(r, parse_word("a c b^-1 c^-1 a^-1", f3)) == parse_word("a b^-1 a^-1", f2));
  CHECK(eval_hom(r, Word(3)).is_identity());

  // Images may reduce against each other: a,b |-> a, ab.
  const GeneratorMap squeeze(f2, f2, {Word::generator(2, 0), parse_word("a b", f2)});
  CHECK(eval_hom(squeeze, parse_word("a^-1 b", f2)) == parse_word("b", f2));
}

TEST_CASE("evaluation respects multiplication and inversion") {
  const GeneratorMap r = retraction();
  const auto ball = enumerate_ball(Alphabet::of_rank(3), 3);
  REQUIRE(ball.size() == 187);
  for (const Word& u : ball) {
    CHECK(eval_hom(r, u.inverse()) == eval_hom(r, u).inverse());
    for (const Word& v : ball) CHECK(eval_hom(r, mul(u, v)) == mul(eval_hom(r, u), eval_hom(r, v)));
  }
}
