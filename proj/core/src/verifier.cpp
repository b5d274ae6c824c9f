#include "grouplarge/verifier.hpp"

namespace grouplarge {

AuditVerdict audit_partition(const PartitionScheme& scheme, const std::vector<Word>& domain) {
  AuditVerdict v;
  const auto sides = scheme.claimed_sides();
  for (const Word& g : domain) {
    try {
      (void)scheme.cell_of(g);
    } catch (const Error&) {
      v.total = false;
    }

    // Raw predicate memberships across all (cell, side) families must not overlap.
    int hits = 0;
    std::string first_hit;
    for (const CellId& cell : scheme.report_cells) {
      for (Side side : sides) {
        if (scheme.raw_member(cell, side, g)) {
          ++hits;
          if (hits == 1) {
            first_hit = cell_name(cell) + "/" + side_name(side);
          } else if (hits == 2 && v.overlaps.size() < kMaxRetainedFailures) {
            v.overlaps.push_back("overlap at cell " + first_hit + " and " + cell_name(cell) + "/" +
                                 side_name(side));
          }
        }
      }
    }
    if (hits > 1) v.predicate_disjoint = false;
  }
  return v;
}

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw Error(Error::Code::InvalidArgument, "empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Error::Code::InvalidArgument, "multiplication table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(Error::Code::InvalidArgument, "table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw Error(Error::Code::InvalidArgument, "element 0 is not an identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) inverse_[static_cast<std::size_t>(a)] = b;
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw Error(Error::Code::InvalidArgument, "element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(Error::Code::InvalidArgument, "multiplication not associative");
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::dihedral(int n) {
  // Element 2i is rotation r^i, element 2i+1 is reflection r^i s.
  const int order = 2 * n;
  auto enc = [&](int rot, int flip) { return 2 * ((rot % n + n) % n) + flip; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order),
                                  std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ra = a / 2, fa = a % 2, rb = b / 2, fb = b % 2;
      // (r^ra s^fa)(r^rb s^fb): s r^k = r^-k s.
      const int rot = fa == 0 ? ra + rb : ra - rb;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = enc(rot, fa ^ fb);
    }
  }
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto neg = [](int a) { return a ^ 1; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // Base products on {1,i,j,k} (indices 0,2,4,6) with signs.
  auto base_mul = [&](int a, int b) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) return 1;               // i*i = -1
    if (a == 2 && b == 4) return 6;     // i*j = k
    if (a == 4 && b == 2) return 7;     // j*i = -k
    if (a == 4 && b == 6) return 2;     // j*k = i
    if (a == 6 && b == 4) return 3;     // k*j = -i
    if (a == 6 && b == 2) return 4;     // k*i = j
    return 5;                           // i*k = -j
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int r = base_mul(a & ~1, b & ~1);
      if (a & 1) r = neg(r);
      if (b & 1) r = neg(r);
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = r;
    }
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::elementary_abelian2(int k) {
  const int n = 1 << k;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return FiniteGroupTable(std::move(t));
}

std::optional<DichotomyCounterexample> dichotomy_oracle(const FiniteGroupTable& table) {
  const int n = table.order();
  if (n > 12)
    throw Error(Error::Code::DomainTooLarge, "dichotomy oracle limited to order 12 (3^n assignments)");

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // left 3-large: some x with {e,x}X = G, i.e. every g in X or x^-1 g in X.
  auto left3 = [&](std::uint32_t x_mask) {
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g)
        if (!((x_mask >> g & 1) || (x_mask >> table.mul(table.inv(x), g) & 1))) ok = false;
      if (ok) return true;
    }
    return false;
  };
  auto right3 = [&](std::uint32_t y_mask) {
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g)
        if (!((y_mask >> g & 1) || (y_mask >> table.mul(g, table.inv(y)) & 1))) ok = false;
      if (ok) return true;
    }
    return false;
  };

  std::uint64_t assignments = 1;
  for (int i = 0; i < n; ++i) assignments *= 3;
  for (std::uint64_t code = 0; code < assignments; ++code) {
    std::uint32_t x_mask = 0, y_mask = 0;
    std::uint64_t rest = code;
    for (int g = 0; g < n; ++g) {
      const int digit = static_cast<int>(rest % 3);
      rest /= 3;
      if (digit == 1) x_mask |= 1u << g;
      if (digit == 2) y_mask |= 1u << g;
    }
    if ((x_mask | y_mask) == full) continue;  // nothing to refute
    if (left3(x_mask) && right3(y_mask)) {
      DichotomyCounterexample ce;
      for (int g = 0; g < n; ++g) {
        if (x_mask >> g & 1) ce.x_cell.push_back(g);
        if (y_mask >> g & 1) ce.y_cell.push_back(g);
      }
      for (int g = 0; g < n; ++g)
        if (!((x_mask | y_mask) >> g & 1)) {
          ce.uncovered = g;
          break;
        }
      return ce;
    }
  }
  return std::nullopt;
}

}  // namespace grouplarge
