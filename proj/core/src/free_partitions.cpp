#include "grouplarge/free_partitions.hpp"

#include <memory>

#include "grouplarge/errors.hpp"

namespace grouplarge {

void PairedAlphabet::validate(int rank) const {
  std::vector<int> seen(static_cast<std::size_t>(rank), 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= rank || y < 0 || y >= rank || x == y)
      throw Error(Error::Code::InvalidPairing, "pair indices out of range or equal");
    ++seen[static_cast<std::size_t>(x)];
    ++seen[static_cast<std::size_t>(y)];
  }
  for (int count : seen)
    if (count != 1)
      throw Error(Error::Code::InvalidPairing, "pairing must cover every generator exactly once");
}

PartitionScheme letter3_scheme(const Alphabet& alphabet) {
  PartitionScheme s(alphabet);
  s.kind = "letter3";
  const int rank = alphabet.rank();
  for (int a = 0; a < rank; ++a) s.report_cells.push_back({CellTag::Letter, a});
  s.completion_cell = {CellTag::Letter, 0};
  s.left_claimed = true;

  s.cell_of = [completion = s.completion_cell](const Word& g) {
    if (g.is_identity()) return completion;
    return CellId{CellTag::Letter, g.boundary_base(Side::Left)};
  };
  s.raw_member = [](const CellId& cell, Side side, const Word& g) {
    return side == Side::Left && !g.is_identity() && g.boundary_base(Side::Left) == cell.index;
  };
  s.coverage_member = s.raw_member;
  s.witness = [rank](const CellId& cell, Side) {
    return std::vector<Word>{Word(rank), Word::generator(rank, cell.index)};
  };
  s.params = {{"rank", std::to_string(rank)}};
  return s;
}

PartitionScheme paired4_scheme(const Alphabet& alphabet, const PairedAlphabet& pairing,
                               ReadingVariant variant) {
  const int rank = alphabet.rank();
  if (rank < 2 || rank % 2 != 0)
    throw Error(Error::Code::InvalidPairing, "paired construction needs an even rank >= 2");
  pairing.validate(rank);

  const int num_pairs = static_cast<int>(pairing.pairs.size());
  auto in_x = std::make_shared<std::vector<bool>>(static_cast<std::size_t>(rank));
  auto x_of = std::make_shared<std::vector<int>>(static_cast<std::size_t>(num_pairs));
  auto y_of = std::make_shared<std::vector<int>>(static_cast<std::size_t>(num_pairs));
  for (int p = 0; p < num_pairs; ++p) {
    auto [x, y] = pairing.pairs[static_cast<std::size_t>(p)];
    (*in_x)[static_cast<std::size_t>(x)] = true;
    (*x_of)[static_cast<std::size_t>(p)] = x;
    (*y_of)[static_cast<std::size_t>(p)] = y;
  }

  // L_alpha: boundary letters in the same class, first letter in pair alpha.
  auto l_member = [in_x, x_of, y_of](int alpha, const Word& g) {
    if (g.is_identity()) return false;
    const int lam = g.boundary_base(Side::Left);
    const int rho = g.boundary_base(Side::Right);
    const std::size_t a = static_cast<std::size_t>(alpha);
    return (lam == (*x_of)[a] && (*in_x)[static_cast<std::size_t>(rho)]) ||
           (lam == (*y_of)[a] && !(*in_x)[static_cast<std::size_t>(rho)]);
  };
  // R_alpha: boundary letters in opposite classes, last letter in pair alpha.
  // The Literal reading keeps the misprint rho(g)=y_alpha <=> rho(g) in X,
  // whose second clause is unsatisfiable.
  auto r_member = [in_x, x_of, y_of, variant](int alpha, const Word& g) {
    if (g.is_identity()) return false;
    const int lam = g.boundary_base(Side::Left);
    const int rho = g.boundary_base(Side::Right);
    const std::size_t a = static_cast<std::size_t>(alpha);
    const bool first = rho == (*x_of)[a] && !(*in_x)[static_cast<std::size_t>(lam)];
    if (variant == ReadingVariant::Literal)
      return first || (rho == (*y_of)[a] && (*in_x)[static_cast<std::size_t>(rho)]);
    return first || (rho == (*y_of)[a] && (*in_x)[static_cast<std::size_t>(lam)]);
  };

  PartitionScheme s(alphabet);
  s.kind = "paired4";
  s.variant = variant;
  for (int p = 0; p < num_pairs; ++p) s.report_cells.push_back({CellTag::Pair, p});
  s.completion_cell = {CellTag::Pair, 0};
  s.left_claimed = true;
  s.right_claimed = true;

  s.cell_of = [l_member, r_member, num_pairs, completion = s.completion_cell](const Word& g) {
    if (g.is_identity()) return completion;
    for (int alpha = 0; alpha < num_pairs; ++alpha)
      if (l_member(alpha, g) || r_member(alpha, g)) return CellId{CellTag::Pair, alpha};
    return completion;  // reachable only under the Literal reading
  };
  s.raw_member = [l_member, r_member](const CellId& cell, Side side, const Word& g) {
    return side == Side::Left ? l_member(cell.index, g) : r_member(cell.index, g);
  };
  // The paper's largeness conclusion is about the whole cell P_alpha.
  s.coverage_member = [l_member, r_member](const CellId& cell, Side, const Word& g) {
    return l_member(cell.index, g) || r_member(cell.index, g);
  };
  s.witness = [rank, x_of, y_of](const CellId& cell, Side) {
    const std::size_t a = static_cast<std::size_t>(cell.index);
    return std::vector<Word>{Word(rank), Word::generator(rank, (*x_of)[a]).inverse(),
                             Word::generator(rank, (*y_of)[a]).inverse()};
  };
  s.params = {{"rank", std::to_string(rank)},
              {"pairs", std::to_string(num_pairs)},
              {"variant", variant_name(variant)}};
  return s;
}

PartitionScheme syllable3_scheme(const Alphabet& alphabet, int a, int b, int m_max) {
  const int rank = alphabet.rank();
  if (a == b) throw Error(Error::Code::SameLetters, "the two distinguished letters must differ");
  if (a < 0 || a >= rank || b < 0 || b >= rank || rank < 2)
    throw Error(Error::Code::InvalidArgument, "letters out of range or rank < 2");
  if (m_max < 1) throw Error(Error::Code::InvalidArgument, "m_max must be >= 1");

  PartitionScheme s(alphabet);
  s.kind = "syllable3";
  for (int m = 1; m <= m_max; ++m) s.report_cells.push_back({CellTag::Syllable, m});
  s.report_cells.push_back({CellTag::Remainder, 0});
  s.completion_cell = {CellTag::Remainder, 0};
  s.left_claimed = true;

  s.cell_of = [a, completion = s.completion_cell](const Word& g) {
    if (g.is_identity() || g.boundary_base(Side::Left) != a) return completion;
    return CellId{CellTag::Syllable, g.boundary_syllable(Side::Left).abs_exponent()};
  };
  s.raw_member = [a](const CellId& cell, Side side, const Word& g) {
    if (side != Side::Left || cell.tag != CellTag::Syllable) return false;
    if (g.is_identity() || g.boundary_base(Side::Left) != a) return false;
    return g.boundary_syllable(Side::Left).abs_exponent() == cell.index;
  };
  s.coverage_member = s.raw_member;
  // {a^m, a^m b} g probes: F = {a^-m, b^-1 a^-m}.
  s.witness = [rank, a, b](const CellId& cell, Side) {
    const int m = cell.index;
    const Word am = Word::power(rank, a, m);
    return std::vector<Word>{am.inverse(), mul(am, Word::generator(rank, b)).inverse()};
  };
  s.params = {{"rank", std::to_string(rank)}, {"a", alphabet.name(a)},
              {"b", alphabet.name(b)},        {"m_max", std::to_string(m_max)}};
  return s;
}

PartitionScheme syllable5_scheme(const Alphabet& f2, ReadingVariant variant, int m_max) {
  if (f2.rank() != 2)
    throw Error(Error::Code::WrongRank, "syllable5 construction needs rank exactly 2");
  if (m_max < 1) throw Error(Error::Code::InvalidArgument, "m_max must be >= 1");
  constexpr int a = 0, b = 1;

  // Corrected: the exponent-1 side of each biconditional is a boundary-letter
  // condition.  Literal: it is an exact length-1 boundary syllable.
  auto end_matches = [variant](const Word& g, Side side, int base) {
    if (variant == ReadingVariant::Corrected) return g.boundary_base(side) == base;
    const Syllable s = g.boundary_syllable(side);
    return s.base == base && s.abs_exponent() == 1;
  };
  auto l_member = [end_matches](int m, const Word& g) {
    if (g.is_identity()) return false;
    const Syllable first = g.boundary_syllable(Side::Left);
    return (first.base == a && first.abs_exponent() == m && end_matches(g, Side::Right, a)) ||
           (first.base == b && first.abs_exponent() == m && end_matches(g, Side::Right, b));
  };
  auto r_member = [end_matches](int m, const Word& g) {
    if (g.is_identity()) return false;
    const Syllable last = g.boundary_syllable(Side::Right);
    return (last.base == a && last.abs_exponent() == m && end_matches(g, Side::Left, b)) ||
           (last.base == b && last.abs_exponent() == m && end_matches(g, Side::Left, a));
  };

  PartitionScheme s(f2);
  s.kind = "syllable5";
  s.variant = variant;
  for (int m = 1; m <= m_max; ++m) s.report_cells.push_back({CellTag::Syllable, m});
  s.completion_cell = {CellTag::Syllable, 1};
  s.left_claimed = true;
  s.right_claimed = true;

  s.cell_of = [l_member, r_member, completion = s.completion_cell](const Word& g) {
    if (g.is_identity()) return completion;
    const int bound = static_cast<int>(g.size());
    for (int m = 1; m <= bound; ++m)
      if (l_member(m, g) || r_member(m, g)) return CellId{CellTag::Syllable, m};
    return completion;  // reachable only under the Literal reading
  };
  s.raw_member = [l_member, r_member](const CellId& cell, Side side, const Word& g) {
    if (cell.tag != CellTag::Syllable) return false;
    return side == Side::Left ? l_member(cell.index, g) : r_member(cell.index, g);
  };
  s.coverage_member = s.raw_member;
  // Left probes {a^m, b^m, a^m b, b^m a} g; right probes g {a^m, b^m, b a^m, a b^m}.
  s.witness = [](const CellId& cell, Side side) {
    const int m = cell.index;
    const Word am = Word::power(2, a, m);
    const Word bm = Word::power(2, b, m);
    const Word ga = Word::generator(2, a);
    const Word gb = Word::generator(2, b);
    std::vector<Word> translations;
    if (side == Side::Left) {
      translations = {am, bm, mul(am, gb), mul(bm, ga)};
    } else {
      translations = {am, bm, mul(gb, am), mul(ga, bm)};
    }
    std::vector<Word> f;
    f.reserve(translations.size());
    for (const Word& t : translations) f.push_back(t.inverse());
    return f;
  };
  s.params = {{"rank", "2"}, {"m_max", std::to_string(m_max)}, {"variant", variant_name(variant)}};
  return s;
}

PartitionScheme lift_scheme(const GeneratorMap& map, const GeneratorMap& section,
                            const PartitionScheme& target_scheme) {
  if (section.source.rank() != map.target.rank() || section.target.rank() != map.source.rank())
    throw Error(Error::Code::AlphabetMismatch, "section must map the target back into the source");
  for (int i = 0; i < map.target.rank(); ++i) {
    const Word gen = Word::generator(map.target.rank(), i);
    if (eval_hom(map, eval_hom(section, gen)) != gen)
      throw Error(Error::Code::SectionNotRightInverse,
                  "section fails on generator " + map.target.name(i));
  }

  auto base = std::make_shared<PartitionScheme>(target_scheme);
  auto shared_map = std::make_shared<GeneratorMap>(map);
  auto shared_section = std::make_shared<GeneratorMap>(section);

  PartitionScheme s(map.source);
  s.kind = "lifted-" + base->kind;
  s.variant = base->variant;
  s.report_cells = base->report_cells;
  s.completion_cell = base->completion_cell;
  s.left_claimed = base->left_claimed;
  s.right_claimed = base->right_claimed;

  s.cell_of = [base, shared_map](const Word& h) { return base->cell_of(eval_hom(*shared_map, h)); };
  s.raw_member = [base, shared_map](const CellId& cell, Side side, const Word& h) {
    return base->raw_member(cell, side, eval_hom(*shared_map, h));
  };
  s.coverage_member = [base, shared_map](const CellId& cell, Side side, const Word& h) {
    return base->coverage_member(cell, side, eval_hom(*shared_map, h));
  };
  s.witness = [base, shared_section](const CellId& cell, Side side) {
    std::vector<Word> lifted;
    for (const Word& w : base->witness(cell, side)) lifted.push_back(eval_hom(*shared_section, w));
    return lifted;
  };
  s.params = base->params;
  s.params["lifted_from_rank"] = std::to_string(map.target.rank());
  s.params["rank"] = std::to_string(map.source.rank());
  return s;
}

DichotomyCertificate dichotomy_certificate(const Word& x, const Word& y, const WordPredicate& in_x,
                                           const WordPredicate& in_y, const Word& g) {
  if (in_x(g) || in_y(g))
    throw Error(Error::Code::InvalidArgument, "g must lie outside X u Y");
  const Word left_step = mul(x.inverse(), g);
  if (!in_x(left_step))
    throw Error(Error::Code::HypothesisViolated, "G = {e,x}X fails at g");
  const Word right_step = mul(g, y.inverse());
  if (!in_y(right_step))
    throw Error(Error::Code::HypothesisViolated, "G = Y{e,y} fails at g");

  // Either an intermediate element already witnesses X n Y, or the premises
  // force x^-1 g y^-1 into both sets.
  if (in_x(right_step)) return {right_step, true, true};
  if (in_y(left_step)) return {left_step, true, true};
  const Word core = mul(left_step, y.inverse());
  if (!in_x(core))
    throw Error(Error::Code::HypothesisViolated, "G = {e,x}X fails at g y^-1");
  if (!in_y(core))
    throw Error(Error::Code::HypothesisViolated, "G = Y{e,y} fails at x^-1 g");
  return {core, true, true};
}

}  // namespace grouplarge
