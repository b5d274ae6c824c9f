#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grouplarge/defs.hpp"

namespace grouplarge {

// One G = F.A / G = A.F verdict with printable content.
struct ReportRecord {
  std::string cell;
  std::string side;
  std::vector<std::string> witness;
  std::uint64_t probes = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> counterexamples;  // up to 10

  bool pass() const { return failure_count == 0; }
};

// A named non-coverage check (uniqueness, stability, oracle verdicts, ...).
struct ReportCheck {
  std::string name;
  bool pass = true;
  std::string details;
};

struct AuditSection {
  bool present = false;
  bool total = true;
  bool functional_disjoint = true;
  bool predicate_disjoint = true;
  std::vector<std::string> overlaps;

  bool pass() const { return !present || (total && functional_disjoint && predicate_disjoint); }
};

// Machine-readable outcome of one verification run.  Deliberately carries
// no timing, so identical configurations serialize identically.
struct ReportDocument {
  std::string construction;
  std::map<std::string, std::string> config;  // echo of the run configuration
  std::map<std::string, std::string> domain;  // descriptor + size + scope
  std::map<std::string, std::string> scheme;  // construction parameters
  AuditSection audit;
  std::vector<ReportRecord> records;
  std::vector<ReportCheck> checks;
  std::string summary;

  bool pass() const;
};

std::string to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);

}  // namespace grouplarge
