#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace grouplarge {

// A subset of the naturals given by a pointwise membership test, with
// derived order-isomorphic enumerators of the set and its complement.
class LazySet {
 public:
  LazySet(std::string name, std::function<bool(std::uint64_t)> member);

  const std::string& name() const { return name_; }
  bool contains(std::uint64_t n) const { return member_(n); }

  std::uint64_t nth_member(std::uint64_t k) const;     // k-th element, 0-based
  std::uint64_t nth_nonmember(std::uint64_t k) const;  // k-th complement element
  std::uint64_t rank_of(std::uint64_t n) const;        // index among members
  std::uint64_t corank_of(std::uint64_t n) const;      // index among nonmembers

  static LazySet evens();
  static LazySet multiples_of(std::uint64_t d);
  static LazySet primes_below(std::uint64_t bound);

 private:
  void extend_to(std::uint64_t n) const;

  std::string name_;
  std::function<bool(std::uint64_t)> member_;
  mutable std::mutex mutex_;
  mutable std::uint64_t scanned_ = 0;
  mutable std::vector<std::uint64_t> members_;
  mutable std::vector<std::uint64_t> nonmembers_;
};

// A permutation of the naturals given pointwise.
struct LazyPermutation {
  std::function<std::uint64_t(std::uint64_t)> apply;
  std::function<std::uint64_t(std::uint64_t)> inverse_apply;
};

// The involution exchanging the k-th member of y with the k-th nonmember,
// so f(Y) is exactly the complement of Y.  Certifies X = {e,f} Y.
LazyPermutation swap_involution(std::shared_ptr<const LazySet> y);

// Cells by dyadic valuation of n+1: C_i = {n : v2(n+1) = i} for i < k-1,
// the last cell absorbing all higher valuations.
std::vector<std::shared_ptr<const LazySet>> dyadic_partition(int levels);

// A permutation of the naturals moving only finitely many points.
class FinitaryPermutation {
 public:
  FinitaryPermutation() = default;
  explicit FinitaryPermutation(std::map<std::uint64_t, std::uint64_t> mapping);

  static FinitaryPermutation from_cycle(const std::vector<std::uint64_t>& cycle);

  std::uint64_t apply(std::uint64_t n) const;
  std::uint64_t apply_inverse(std::uint64_t n) const;
  // Largest moved point; 0 when the permutation is the identity.
  std::uint64_t max_support() const;

 private:
  std::map<std::uint64_t, std::uint64_t> forward_;
  std::map<std::uint64_t, std::uint64_t> backward_;
};

// Least z outside Y above every support point of F: then z avoids F.Y, so Y
// is not large under finitary permutations.  Throws ProbeExhausted if no
// such z exists below probe_bound.
std::uint64_t refute_kappa_large(const LazySet& y, const std::vector<FinitaryPermutation>& f,
                                 std::uint64_t probe_bound);

struct NotLargeVerdict {
  std::uint64_t witness;
  bool verified;                        // independent re-check of the witness
  std::vector<std::string> transcript;  // one line per probe
};

NotLargeVerdict check_not_large(const LazySet& y, const std::vector<FinitaryPermutation>& f,
                                std::uint64_t probe_bound);

}  // namespace grouplarge
