#include <doctest.h>

#include <memory>

#include "grouplarge/gspace.hpp"
#include "helpers.hpp"

using namespace grouplarge;
using Code = Error::Code;

TEST_CASE("lazy set enumerators") {
  const LazySet evens = LazySet::evens();
  CHECK(evens.name() == "evens");
  CHECK(evens.contains(0));
  CHECK(!evens.contains(7));
  CHECK(evens.nth_member(0) == 0);
  CHECK(evens.nth_member(3) == 6);
  CHECK(evens.nth_nonmember(3) == 7);
  CHECK(evens.rank_of(10) == 5);
  CHECK(evens.corank_of(7) == 3);
  CHECK(error_code([&] { evens.rank_of(3); }) == Code::EnumeratorInconsistent);
  CHECK(error_code([&] { evens.corank_of(4); }) == Code::EnumeratorInconsistent);

  const LazySet mult3 = LazySet::multiples_of(3);
  CHECK(mult3.name() == "multiples-of-3");
  CHECK(mult3.contains(0));
  CHECK(mult3.contains(9));
  CHECK(!mult3.contains(4));
  CHECK(mult3.nth_member(4) == 12);
  CHECK(mult3.nth_nonmember(0) == 1);

  const LazySet primes = LazySet::primes_below(100);
  CHECK(primes.contains(2));
  CHECK(primes.contains(97));
  CHECK(!primes.contains(1));
  CHECK(!primes.contains(91));   // 7 * 13
  CHECK(!primes.contains(101));  // beyond the sieve bound
  CHECK(primes.nth_member(0) == 2);
  CHECK(primes.nth_member(24) == 97);
}

TEST_CASE("swap involution exchanges a set with its complement") {
  const auto evens = std::make_shared<const LazySet>(
      "evens", [](std::uint64_t n) { return n % 2 == 0; });
  const LazyPermutation f = swap_involution(evens);
  CHECK(f.apply(0) == 1);
  CHECK(f.apply(1) == 0);
  CHECK(f.apply(2) == 3);
  CHECK(f.apply(3) == 2);
  CHECK(f.apply(10) == 11);
  for (std::uint64_t n = 0; n < 2000; ++n) {
    CHECK(f.apply(f.apply(n)) == n);
    CHECK(f.inverse_apply(n) == f.apply(n));
    CHECK(evens->contains(n) != evens->contains(f.apply(n)));
  }

  const auto primes = std::make_shared<const LazySet>(
      "primes", [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
          if (n % d == 0) return false;
        return true;
      });
  const LazyPermutation g = swap_involution(primes);
  CHECK(g.apply(0) == 2);  // first nonmember <-> first prime
  CHECK(g.apply(2) == 0);
  for (std::uint64_t n = 0; n < 200; ++n) {
    CHECK(g.apply(g.apply(n)) == n);
    CHECK(primes->contains(n) != primes->contains(g.apply(n)));
  }
}

TEST_CASE("dyadic cells") {
  const auto cells = dyadic_partition(5);
  REQUIRE(cells.size() == 5);
  CHECK(cells[0]->name() == "dyadic-0");

  // Cell i < 4 is exactly {2^(i+1) t + 2^i - 1}.
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t step = std::uint64_t{1} << (i + 1);
    const std::uint64_t offset = (std::uint64_t{1} << i) - 1;
    for (std::uint64_t t = 0; t < 200; ++t) CHECK(cells[i]->nth_member(t) == step * t + offset);
  }
  // The last cell absorbs every higher valuation.
  CHECK(cells[4]->contains(15));   // v2(16) = 4
  CHECK(cells[4]->contains(31));   // v2(32) = 5
  CHECK(cells[4]->contains(127));
  CHECK(!cells[4]->contains(7));   // v2(8) = 3

  // Each n lies in exactly one cell.
  for (std::uint64_t n = 0; n < 3000; ++n) {
    int hits = 0;
    for (const auto& cell : cells)
      if (cell->contains(n)) ++hits;
    CHECK(hits == 1);
  }

  CHECK(error_code([] { dyadic_partition(0); }) == Code::InvalidArgument);
}

TEST_CASE("finitary permutations") {
  const auto cycle = FinitaryPermutation::from_cycle({4, 7, 9});
  CHECK(cycle.apply(4) == 7);
  CHECK(cycle.apply(7) == 9);
  CHECK(cycle.apply(9) == 4);
  CHECK(cycle.apply(5) == 5);
  CHECK(cycle.apply_inverse(7) == 4);
  CHECK(cycle.apply_inverse(5) == 5);
  CHECK(cycle.max_support() == 9);

  CHECK(FinitaryPermutation().max_support() == 0);
  CHECK(FinitaryPermutation().apply(42) == 42);

  CHECK(error_code([] {
          FinitaryPermutation(std::map<std::uint64_t, std::uint64_t>{{0, 1}});
        }) == Code::InvalidArgument);
  CHECK(error_code([] {
          FinitaryPermutation(std::map<std::uint64_t, std::uint64_t>{{0, 2}, {1, 2}, {2, 0}});
        }) == Code::InvalidArgument);
}

TEST_CASE("refuting largeness under finitary permutations") {
  const LazySet evens = LazySet::evens();
  const std::vector<FinitaryPermutation> f{FinitaryPermutation::from_cycle({0, 1}),
                                           FinitaryPermutation::from_cycle({2, 3, 4})};
  CHECK(refute_kappa_large(evens, f, 10000) == 5);
  CHECK(refute_kappa_large(evens, {}, 10000) == 1);

  const auto verdict = check_not_large(evens, f, 10000);
  CHECK(verdict.witness == 5);
  CHECK(verdict.verified);
  REQUIRE(verdict.transcript.size() == 3);
  CHECK(verdict.transcript[0] == "z = 5 outside evens: ok");

  CHECK(error_code([] {
          refute_kappa_large(LazySet::multiples_of(1), {}, 100);
        }) == Code::ProbeExhausted);
  CHECK(error_code([&] { refute_kappa_large(evens, {}, 1); }) == Code::ProbeExhausted);
}
