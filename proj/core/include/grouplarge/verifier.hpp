#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "grouplarge/defs.hpp"
#include "grouplarge/errors.hpp"
#include "grouplarge/partition.hpp"
#include "grouplarge/word.hpp"

namespace grouplarge {

inline constexpr std::size_t kMaxRetainedFailures = 10;

// Group operations over an arbitrary element type, so the same engine runs
// on free-group words and on finite model elements.
template <class E>
struct GroupOps {
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> inv;
};

inline GroupOps<Word> word_ops() {
  return {[](const Word& u, const Word& v) { return mul(u, v); },
          [](const Word& u) { return u.inverse(); }};
}

template <class E>
struct Counterexample {
  std::size_t domain_index;
  E element;
};

// Verdict of one G = F.A (or G = A.F) check over a finite domain.
template <class E>
struct CheckRecord {
  std::string cell;
  Side side = Side::Left;
  std::size_t witness_size = 0;
  std::uint64_t probes = 0;
  std::uint64_t failure_count = 0;
  std::vector<Counterexample<E>> failures;  // first kMaxRetainedFailures by domain index

  bool pass() const { return failure_count == 0; }
};

namespace detail {

template <class E, class Covered>
void scan_domain(const std::vector<E>& domain, unsigned jobs, const Covered& covered,
                 std::uint64_t& failure_count, std::vector<Counterexample<E>>& failures) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (!covered(domain[i])) {
        ++failure_count;
        if (failures.size() < kMaxRetainedFailures) failures.push_back({i, domain[i]});
      }
    }
    return;
  }
  struct Shard {
    std::uint64_t count = 0;
    std::vector<Counterexample<E>> kept;
  };
  std::vector<Shard> shards(jobs);
  std::vector<std::thread> threads;
  const std::size_t chunk = (domain.size() + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(domain.size(), begin + chunk);
      for (std::size_t i = begin; i < end; ++i) {
        if (!covered(domain[i])) {
          ++shards[t].count;
          if (shards[t].kept.size() < kMaxRetainedFailures) shards[t].kept.push_back({i, domain[i]});
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const Shard& s : shards) {
    failure_count += s.count;
    for (const auto& f : s.kept)
      if (failures.size() < kMaxRetainedFailures) failures.push_back(f);
  }
  // Shards are contiguous and processed in order, so kept failures are
  // already sorted by domain index.
}

}  // namespace detail

// Passes iff every g in the domain has some f in F with f^-1 g in A.
template <class E>
CheckRecord<E> check_left_coverage(const std::vector<E>& witness,
                                   const std::function<bool(const E&)>& member,
                                   const std::vector<E>& domain, const GroupOps<E>& ops,
                                   unsigned jobs = 1, std::string cell = "") {
  if (witness.empty()) throw Error(Error::Code::InvalidArgument, "witness set must be nonempty");
  CheckRecord<E> rec;
  rec.cell = std::move(cell);
  rec.side = Side::Left;
  rec.witness_size = witness.size();
  rec.probes = static_cast<std::uint64_t>(domain.size()) * witness.size();
  std::vector<E> inv_witness;
  inv_witness.reserve(witness.size());
  for (const E& f : witness) inv_witness.push_back(ops.inv(f));
  detail::scan_domain(
      domain, jobs,
      [&](const E& g) {
        for (const E& fi : inv_witness)
          if (member(ops.mul(fi, g))) return true;
        return false;
      },
      rec.failure_count, rec.failures);
  return rec;
}

// Mirror image: every g has some f in F with g f^-1 in A.
template <class E>
CheckRecord<E> check_right_coverage(const std::vector<E>& witness,
                                    const std::function<bool(const E&)>& member,
                                    const std::vector<E>& domain, const GroupOps<E>& ops,
                                    unsigned jobs = 1, std::string cell = "") {
  if (witness.empty()) throw Error(Error::Code::InvalidArgument, "witness set must be nonempty");
  CheckRecord<E> rec;
  rec.cell = std::move(cell);
  rec.side = Side::Right;
  rec.witness_size = witness.size();
  rec.probes = static_cast<std::uint64_t>(domain.size()) * witness.size();
  std::vector<E> inv_witness;
  inv_witness.reserve(witness.size());
  for (const E& f : witness) inv_witness.push_back(ops.inv(f));
  detail::scan_domain(
      domain, jobs,
      [&](const E& g) {
        for (const E& fi : inv_witness)
          if (member(ops.mul(g, fi))) return true;
        return false;
      },
      rec.failure_count, rec.failures);
  return rec;
}

template <class E>
CheckRecord<E> check_coverage(Side side, const std::vector<E>& witness,
                              const std::function<bool(const E&)>& member,
                              const std::vector<E>& domain, const GroupOps<E>& ops,
                              unsigned jobs = 1, std::string cell = "") {
  return side == Side::Left
             ? check_left_coverage(witness, member, domain, ops, jobs, std::move(cell))
             : check_right_coverage(witness, member, domain, ops, jobs, std::move(cell));
}

// Totality, functional disjointness, and raw-predicate pairwise disjointness
// of a partition scheme over a finite word domain.
struct AuditVerdict {
  bool total = true;
  bool functional_disjoint = true;   // cell_of is a function; recorded for the report
  bool predicate_disjoint = true;
  std::vector<std::string> overlaps;  // up to kMaxRetainedFailures descriptions

  bool pass() const { return total && functional_disjoint && predicate_disjoint; }
};

AuditVerdict audit_partition(const PartitionScheme& scheme, const std::vector<Word>& domain);

enum class WitnessSearchMode { Greedy, Exact };

// Smallest F subset of candidates with domain covered by F.A (left) or A.F
// (right).  Exact mode is branch-and-bound, limited to 24 candidates.
// Throws Infeasible when even the full candidate set fails.
template <class E>
std::vector<E> min_witness(Side side, const std::vector<E>& candidates,
                           const std::function<bool(const E&)>& member,
                           const std::vector<E>& domain, const GroupOps<E>& ops,
                           WitnessSearchMode mode) {
  if (mode == WitnessSearchMode::Exact && candidates.size() > 24)
    throw Error(Error::Code::InvalidArgument, "exact search limited to 24 candidates");

  const std::size_t n = domain.size();
  const std::size_t words = (n + 63) / 64;
  // covers[c] = bitset of domain elements candidate c covers.
  std::vector<std::vector<std::uint64_t>> covers(candidates.size(),
                                                 std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const E fi = ops.inv(candidates[c]);
    for (std::size_t i = 0; i < n; ++i) {
      const bool hit = side == Side::Left ? member(ops.mul(fi, domain[i]))
                                          : member(ops.mul(domain[i], fi));
      if (hit) covers[c][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  std::vector<std::uint64_t> full(words, 0);
  for (std::size_t i = 0; i < n; ++i) full[i / 64] |= std::uint64_t{1} << (i % 64);
  auto all_union = std::vector<std::uint64_t>(words, 0);
  for (const auto& cov : covers)
    for (std::size_t w = 0; w < words; ++w) all_union[w] |= cov[w];
  if (all_union != full)
    throw Error(Error::Code::Infeasible, "candidates cannot cover the domain");

  auto count_new = [&](const std::vector<std::uint64_t>& covered, std::size_t c) {
    std::uint64_t gain = 0;
    for (std::size_t w = 0; w < words; ++w)
      gain += static_cast<std::uint64_t>(std::popcount(covers[c][w] & ~covered[w]));
    return gain;
  };

  // Greedy pass; also the upper bound for the exact search.
  std::vector<std::size_t> greedy;
  {
    std::vector<std::uint64_t> covered(words, 0);
    while (covered != full) {
      std::size_t best = candidates.size();
      std::uint64_t best_gain = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const std::uint64_t gain = count_new(covered, c);
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      greedy.push_back(best);
      for (std::size_t w = 0; w < words; ++w) covered[w] |= covers[best][w];
    }
  }
  if (mode == WitnessSearchMode::Greedy) {
    std::vector<E> out;
    for (std::size_t c : greedy) out.push_back(candidates[c]);
    return out;
  }

  // Branch and bound on the least-covered uncovered element.
  std::vector<std::size_t> best_set(greedy);
  std::vector<std::size_t> chosen;
  std::function<void(std::vector<std::uint64_t>&)> search = [&](std::vector<std::uint64_t>& covered) {
    if (chosen.size() >= best_set.size()) return;
    std::size_t pivot = n;
    std::size_t pivot_options = candidates.size() + 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (covered[i / 64] >> (i % 64) & 1) continue;
      std::size_t options = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c)
        if (covers[c][i / 64] >> (i % 64) & 1) ++options;
      if (options < pivot_options) {
        pivot_options = options;
        pivot = i;
      }
    }
    if (pivot == n) {  // everything covered
      best_set = chosen;
      return;
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!(covers[c][pivot / 64] >> (pivot % 64) & 1)) continue;
      std::vector<std::uint64_t> next(covered);
      for (std::size_t w = 0; w < words; ++w) next[w] |= covers[c][w];
      chosen.push_back(c);
      search(next);
      chosen.pop_back();
    }
  };
  std::vector<std::uint64_t> covered(words, 0);
  search(covered);
  std::vector<E> out;
  for (std::size_t c : best_set) out.push_back(candidates[c]);
  return out;
}

// Finite group given by its multiplication table; identity is element 0.
class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(std::vector<std::vector<int>> table);

  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable dihedral(int n);  // order 2n
  static FiniteGroupTable quaternion8();
  static FiniteGroupTable elementary_abelian2(int k);  // order 2^k

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

struct DichotomyCounterexample {
  std::vector<int> x_cell;
  std::vector<int> y_cell;
  int uncovered;  // element outside X u Y despite both cells being large
};

// Exhausts all assignments of elements to {X, Y, neither} and checks that a
// disjoint pair (left 3-large X, right 3-large Y) always satisfies
// X u Y = G.  Empty optional means the statement held.
std::optional<DichotomyCounterexample> dichotomy_oracle(const FiniteGroupTable& table);

}  // namespace grouplarge
