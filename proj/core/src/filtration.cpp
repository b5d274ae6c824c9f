#include "grouplarge/filtration.hpp"

namespace grouplarge {

DirectSumModel::DirectSumModel(int base_bits, int levels, std::uint64_t limit)
    : base_bits_(base_bits), levels_(levels) {
  if (base_bits < 1)
    throw Error(Error::Code::InvalidArgument, "need base_bits >= 1 (pi needs a nonempty G_1)");
  if (levels < 2) throw Error(Error::Code::InvalidArgument, "need at least 2 levels");
  const int total_bits = base_bits + levels - 1;
  if (total_bits >= 31 || (std::uint64_t{1} << total_bits) > limit)
    throw Error(Error::Code::DomainTooLarge, "direct-sum carrier exceeds the guard limit");
  for (int alpha = 1; alpha < levels; ++alpha)
    transversals_.push_back({Elem{1} << (base_bits + alpha - 1)});
}

std::vector<DirectSumModel::Elem> DirectSumModel::carrier() const {
  std::vector<Elem> out(size());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

std::vector<DirectSumModel::Elem> DirectSumModel::subgroup1() const {
  std::vector<Elem> out(std::size_t{1} << base_bits_);
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

}  // namespace grouplarge
