#include <doctest.h>

#include <json.hpp>

#include "grouplarge/partition.hpp"
#include "grouplarge/pipeline.hpp"
#include "grouplarge/report.hpp"
#include "helpers.hpp"

using namespace grouplarge;

namespace {

ReportDocument sample_doc() {
  ReportDocument doc;
  doc.construction = "sample";
  doc.config = {{"radius", "4"}};
  doc.domain = {{"kind", "ball"}, {"size", "161"}};
  doc.scheme = {{"kind", "letter3"}};
  doc.audit = {true, true, true, true, {}};
  doc.records.push_back({"letter-0", "left", {"e", "a"}, 322, 0, {}});
  doc.records.push_back({"letter-1", "left", {"e", "b"}, 322, 2, {"a b", "b^-1"}});
  doc.checks.push_back({"sample_check", true, "fine"});
  doc.summary = "sample summary";
  return doc;
}

}  // namespace

TEST_CASE("cell names") {
  CHECK(cell_name({CellTag::Letter, 0}) == "letter-0");
  CHECK(cell_name({CellTag::Pair, 1}) == "pair-1");
  CHECK(cell_name({CellTag::Syllable, 3}) == "syllable-3");
  CHECK(cell_name({CellTag::Filtration, 5}) == "level-5");
  CHECK(cell_name({CellTag::Remainder, 0}) == "remainder");
}

TEST_CASE("document verdict") {
  ReportDocument doc = sample_doc();
  CHECK(!doc.pass());  // letter-1 has failures
  doc.records[1].failure_count = 0;
  CHECK(doc.pass());
  doc.checks[0].pass = false;
  CHECK(!doc.pass());
  doc.checks[0].pass = true;
  doc.audit.predicate_disjoint = false;
  CHECK(!doc.pass());
  doc.audit.present = false;  // absent audit sections do not veto
  CHECK(doc.pass());
}

TEST_CASE("json serialization") {
  const ReportDocument doc = sample_doc();
  const std::string a = to_json(doc);
  const std::string b = to_json(doc);
  CHECK(a == b);
  CHECK(a.back() == '\n');

  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == 1);
  CHECK(j["construction"] == "sample");
  CHECK(j["config"]["radius"] == "4");
  CHECK(j["audit"]["predicate_disjoint"] == true);
  REQUIRE(j["records"].size() == 2);
  CHECK(j["records"][0]["cell"] == "letter-0");
  CHECK(j["records"][0]["witness_size"] == 2);
  CHECK(j["records"][0]["pass"] == true);
  CHECK(j["records"][1]["failure_count"] == 2);
  CHECK(j["records"][1]["counterexamples"][0] == "a b");
  CHECK(j["records"][1]["pass"] == false);
  CHECK(j["checks"][0]["name"] == "sample_check");
  CHECK(j["pass"] == false);

  ReportDocument no_audit = doc;
  no_audit.audit.present = false;
  CHECK(!nlohmann::json::parse(to_json(no_audit)).contains("audit"));
}

TEST_CASE("csv serialization") {
  const std::string csv = to_csv(sample_doc());
  const std::string expected =
      "construction,cell,side,witness_size,probes,failures,verdict\n"
      "sample,letter-0,left,2,322,0,pass\n"
      "sample,letter-1,left,2,322,2,fail\n";
  CHECK(csv == expected);
}

TEST_CASE("pipeline run surface") {
  RunConfig config;
  config.construction = "free-3large";
  config.rank = 2;
  config.radius = 3;
  const ReportDocument doc = run(config);
  CHECK(doc.pass());
  CHECK(doc.domain.at("size") == "53");
  CHECK(doc.records.size() == 2);
  CHECK(exit_code(doc) == 0);

  RunConfig bad = config;
  bad.construction = "nonsense";
  CHECK(error_code([&] { run(bad); }) == Error::Code::InvalidArgument);

  RunConfig lifted = config;
  lifted.construction = "lifted";
  lifted.rank = 2;
  CHECK(error_code([&] { run(lifted); }) == Error::Code::InvalidArgument);

  RunConfig dich = config;
  dich.construction = "dichotomy";
  dich.group = "x9";
  CHECK(error_code([&] { run(dich); }) == Error::Code::InvalidArgument);

  RunConfig gs = config;
  gs.construction = "gspace-refute";
  gs.set_name = "nope";
  CHECK(error_code([&] { run(gs); }) == Error::Code::InvalidArgument);
}
