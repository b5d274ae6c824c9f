#include "grouplarge/report.hpp"

#include <json.hpp>

namespace grouplarge {

bool ReportDocument::pass() const {
  if (!audit.pass()) return false;
  for (const auto& rec : records)
    if (!rec.pass()) return false;
  for (const auto& chk : checks)
    if (!chk.pass) return false;
  return true;
}

std::string to_json(const ReportDocument& doc) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = 1;
  j["tool_version"] = kToolVersion;
  j["construction"] = doc.construction;
  j["config"] = json::object();
  for (const auto& [k, v] : doc.config) j["config"][k] = v;
  j["domain"] = json::object();
  for (const auto& [k, v] : doc.domain) j["domain"][k] = v;
  j["scheme"] = json::object();
  for (const auto& [k, v] : doc.scheme) j["scheme"][k] = v;
  if (doc.audit.present) {
    j["audit"] = {{"total", doc.audit.total},
                  {"functional_disjoint", doc.audit.functional_disjoint},
                  {"predicate_disjoint", doc.audit.predicate_disjoint},
                  {"overlaps", doc.audit.overlaps}};
  }
  j["records"] = json::array();
  for (const auto& rec : doc.records) {
    j["records"].push_back({{"cell", rec.cell},
                            {"side", rec.side},
                            {"witness", rec.witness},
                            {"witness_size", rec.witness.size()},
                            {"probes", rec.probes},
                            {"failure_count", rec.failure_count},
                            {"counterexamples", rec.counterexamples},
                            {"pass", rec.pass()}});
  }
  j["checks"] = json::array();
  for (const auto& chk : doc.checks)
    j["checks"].push_back({{"name", chk.name}, {"pass", chk.pass}, {"details", chk.details}});
  j["pass"] = doc.pass();
  j["summary"] = doc.summary;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const ReportDocument& doc) {
  std::string out = "construction,cell,side,witness_size,probes,failures,verdict\n";
  for (const auto& rec : doc.records) {
    out += csv_escape(doc.construction) + "," + csv_escape(rec.cell) + "," + rec.side + "," +
           std::to_string(rec.witness.size()) + "," + std::to_string(rec.probes) + "," +
           std::to_string(rec.failure_count) + "," + (rec.pass() ? "pass" : "fail") + "\n";
  }
  return out;
}

}  // namespace grouplarge
