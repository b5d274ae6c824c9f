#pragma once

#include <cstdint>
#include <string>

#include "grouplarge/partition.hpp"
#include "grouplarge/report.hpp"

namespace grouplarge {

// One reproducible construction + verification run.
struct RunConfig {
  std::string construction;

  int rank = 2;
  int radius = 4;
  int pairs = 0;  // 0 derives rank / 2
  ReadingVariant variant = ReadingVariant::Corrected;
  int m_max = 3;

  int base = 4;    // filtration |G_1| bits; also cyclic order shorthand
  int levels = 9;  // filtration chain length / dyadic cell count
  std::uint64_t pi_seed = 0;

  std::string group = "z8";  // dichotomy target: z<n>, d<n>, q8, ea<k>

  std::string set_name = "evens";  // gspace base set
  std::uint64_t prefix = 10000;
  int trials = 100;
  std::uint64_t seed = 1;

  unsigned jobs = 1;
  std::uint64_t limit = kDefaultDomainLimit;
};

ReportDocument run(const RunConfig& config);

inline int exit_code(const ReportDocument& doc) { return doc.pass() ? 0 : 1; }

}  // namespace grouplarge
