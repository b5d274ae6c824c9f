#include "grouplarge/gspace.hpp"

#include <algorithm>

#include "grouplarge/errors.hpp"

namespace grouplarge {

namespace {
// Enumerator caches stop growing here; a set that has not produced the
// requested element by then is treated as effectively finite.
constexpr std::uint64_t kScanCap = std::uint64_t{1} << 26;
}  // namespace

LazySet::LazySet(std::string name, std::function<bool(std::uint64_t)> member)
    : name_(std::move(name)), member_(std::move(member)) {}

void LazySet::extend_to(std::uint64_t n) const {
  while (scanned_ <= n) {
    if (scanned_ > kScanCap)
      throw Error(Error::Code::ProbeExhausted,
                  "set '" + name_ + "' exhausted the enumeration cap");
    (member_(scanned_) ? members_ : nonmembers_).push_back(scanned_);
    ++scanned_;
  }
}

std::uint64_t LazySet::nth_member(std::uint64_t k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (members_.size() <= k) extend_to(scanned_);
  return members_[k];
}

std::uint64_t LazySet::nth_nonmember(std::uint64_t k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (nonmembers_.size() <= k) extend_to(scanned_);
  return nonmembers_[k];
}

std::uint64_t LazySet::rank_of(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!member_(n))
    throw Error(Error::Code::EnumeratorInconsistent, "rank_of called on a nonmember");
  extend_to(n);
  const auto it = std::lower_bound(members_.begin(), members_.end(), n);
  return static_cast<std::uint64_t>(it - members_.begin());
}

std::uint64_t LazySet::corank_of(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (member_(n))
    throw Error(Error::Code::EnumeratorInconsistent, "corank_of called on a member");
  extend_to(n);
  const auto it = std::lower_bound(nonmembers_.begin(), nonmembers_.end(), n);
  return static_cast<std::uint64_t>(it - nonmembers_.begin());
}

LazySet LazySet::evens() {
  return LazySet("evens", [](std::uint64_t n) { return n % 2 == 0; });
}

LazySet LazySet::multiples_of(std::uint64_t d) {
  return LazySet("multiples-of-" + std::to_string(d),
                 [d](std::uint64_t n) { return n % d == 0; });
}

LazySet LazySet::primes_below(std::uint64_t bound) {
  auto sieve = std::make_shared<std::vector<bool>>(bound, true);
  if (bound > 0) (*sieve)[0] = false;
  if (bound > 1) (*sieve)[1] = false;
  for (std::uint64_t p = 2; p * p < bound; ++p)
    if ((*sieve)[p])
      for (std::uint64_t q = p * p; q < bound; q += p) (*sieve)[q] = false;
  return LazySet("primes-below-" + std::to_string(bound),
                 [sieve, bound](std::uint64_t n) { return n < bound && (*sieve)[n]; });
}

LazyPermutation swap_involution(std::shared_ptr<const LazySet> y) {
  auto apply = [y](std::uint64_t n) {
    return y->contains(n) ? y->nth_nonmember(y->rank_of(n)) : y->nth_member(y->corank_of(n));
  };
  return {apply, apply};  // an involution is its own inverse
}

std::vector<std::shared_ptr<const LazySet>> dyadic_partition(int levels) {
  if (levels < 1) throw Error(Error::Code::InvalidArgument, "need at least one level");
  auto valuation = [](std::uint64_t n) {
    int v = 0;
    std::uint64_t m = n + 1;
    while (m % 2 == 0) {
      m /= 2;
      ++v;
    }
    return v;
  };
  std::vector<std::shared_ptr<const LazySet>> cells;
  for (int i = 0; i < levels; ++i) {
    const bool last = i == levels - 1;
    cells.push_back(std::make_shared<LazySet>(
        "dyadic-" + std::to_string(i), [valuation, i, last](std::uint64_t n) {
          return last ? valuation(n) >= i : valuation(n) == i;
        }));
  }
  return cells;
}

FinitaryPermutation::FinitaryPermutation(std::map<std::uint64_t, std::uint64_t> mapping)
    : forward_(std::move(mapping)) {
  for (const auto& [from, to] : forward_) {
    if (!forward_.count(to))
      throw Error(Error::Code::InvalidArgument, "support map range differs from its domain");
    if (backward_.count(to))
      throw Error(Error::Code::InvalidArgument, "support map is not injective");
    backward_[to] = from;
  }
}

FinitaryPermutation FinitaryPermutation::from_cycle(const std::vector<std::uint64_t>& cycle) {
  std::map<std::uint64_t, std::uint64_t> mapping;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    mapping[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return FinitaryPermutation(std::move(mapping));
}

std::uint64_t FinitaryPermutation::apply(std::uint64_t n) const {
  const auto it = forward_.find(n);
  return it == forward_.end() ? n : it->second;
}

std::uint64_t FinitaryPermutation::apply_inverse(std::uint64_t n) const {
  const auto it = backward_.find(n);
  return it == backward_.end() ? n : it->second;
}

std::uint64_t FinitaryPermutation::max_support() const {
  std::uint64_t m = 0;
  for (const auto& [from, to] : forward_)
    if (from != to) m = std::max(m, std::max(from, to));
  return m;
}

std::uint64_t refute_kappa_large(const LazySet& y, const std::vector<FinitaryPermutation>& f,
                                 std::uint64_t probe_bound) {
  std::uint64_t floor = 0;
  for (const FinitaryPermutation& p : f) floor = std::max(floor, p.max_support());
  for (std::uint64_t z = floor + 1; z < probe_bound; ++z)
    if (!y.contains(z)) return z;
  throw Error(Error::Code::ProbeExhausted,
              "no element outside '" + y.name() + "' above the supports below the probe bound");
}

NotLargeVerdict check_not_large(const LazySet& y, const std::vector<FinitaryPermutation>& f,
                                std::uint64_t probe_bound) {
  const std::uint64_t z = refute_kappa_large(y, f, probe_bound);
  NotLargeVerdict verdict{z, true, {}};
  if (y.contains(z)) verdict.verified = false;
  verdict.transcript.push_back("z = " + std::to_string(z) + " outside " + y.name() + ": " +
                               (y.contains(z) ? "FAIL" : "ok"));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint64_t pre = f[i].apply_inverse(z);
    const bool ok = !y.contains(pre);
    if (!ok) verdict.verified = false;
    verdict.transcript.push_back("f_" + std::to_string(i) + "^-1(z) = " + std::to_string(pre) +
                                 " outside " + y.name() + ": " + (ok ? "ok" : "FAIL"));
  }
  return verdict;
}

}  // namespace grouplarge
