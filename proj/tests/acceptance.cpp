// End-to-end acceptance gate: runs the full verification scenarios at their
// production scales and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "grouplarge/ball.hpp"
#include "grouplarge/free_partitions.hpp"
#include "grouplarge/pipeline.hpp"
#include "grouplarge/report.hpp"
#include "grouplarge/verifier.hpp"

using namespace grouplarge;

namespace {

std::vector<RunConfig> g_determinism_configs;

ReportDocument tracked_run(const RunConfig& config) {
  g_determinism_configs.push_back(config);
  return run(config);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool require(bool ok, const std::string& what, std::string& details) {
  if (!ok && details.empty()) details = what;
  return ok;
}

// --- criterion 1: first-letter cells on the radius-6 ball in rank 4 ---------

bool letter_cells_full_scale(std::string& details) {
  RunConfig config;
  config.construction = "free-3large";
  config.rank = 4;
  config.radius = 6;
  config.jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  const ReportDocument doc = tracked_run(config);
  const double elapsed = seconds_since(start);

  bool ok = require(doc.domain.at("size") == "156865", "unexpected ball size", details);
  ok &= require(doc.audit.pass(), "audit failed", details);
  ok &= require(doc.records.size() == 4, "expected one record per generator", details);
  for (const auto& rec : doc.records)
    ok &= require(rec.failure_count == 0, "coverage failure in " + rec.cell, details);
  ok &= require(elapsed < 10.0,
                "single-threaded run took " + std::to_string(elapsed) + "s", details);
  return ok;
}

// --- criterion 2: pair cells, corrected vs literal ---------------------------

bool pair_cells_both_variants(std::string& details) {
  RunConfig config;
  config.construction = "free-4large";
  config.rank = 6;
  config.pairs = 3;
  config.radius = 5;
  config.jobs = 8;
  const ReportDocument good = tracked_run(config);

  bool ok = require(good.domain.at("size") == "193261", "unexpected ball size", details);
  ok &= require(good.audit.predicate_disjoint, "raw families overlap", details);
  ok &= require(good.records.size() == 6, "expected three cells, two sides", details);
  ok &= require(good.pass(), "corrected coverage failed", details);

  config.variant = ReadingVariant::Literal;
  const ReportDocument bad = tracked_run(config);
  ok &= require(!bad.pass(), "literal reading unexpectedly passed", details);
  bool reported = !bad.audit.pass();
  for (const auto& rec : bad.records) reported = reported || !rec.counterexamples.empty();
  ok &= require(reported, "literal failure carries no counterexample", details);
  return ok;
}

// --- criterion 3: syllable cells on the radius-8 ball ------------------------

bool syllable_cells_left(std::string& details) {
  RunConfig config;
  config.construction = "free-3large-syllable";
  config.rank = 2;
  config.radius = 8;
  config.m_max = 5;
  config.jobs = 8;
  const ReportDocument doc = tracked_run(config);

  bool ok = require(doc.domain.at("size") == "13121", "unexpected ball size", details);
  ok &= require(doc.records.size() == 5, "expected syllable lengths 1..5", details);
  for (const auto& rec : doc.records)
    ok &= require(rec.failure_count == 0, "coverage failure in " + rec.cell, details);
  ok &= require(doc.pass(), "run failed", details);
  return ok;
}

// --- criterion 4: two-sided syllable cells, corrected vs literal -------------

bool twosided_syllable_cells(std::string& details) {
  RunConfig config;
  config.construction = "free-5large";
  config.radius = 6;
  config.m_max = 4;
  config.jobs = 8;
  const ReportDocument good = tracked_run(config);
  bool ok = require(good.pass(), "corrected run failed", details);
  ok &= require(good.records.size() == 8, "expected four lengths, two sides", details);
  ok &= require(good.audit.pass(), "audit failed", details);

  config.variant = ReadingVariant::Literal;
  const ReportDocument bad = tracked_run(config);
  ok &= require(!bad.pass(), "literal reading unexpectedly passed", details);

  // The pinned counterexample: at length 2 none of the four left translates
  // of a^3 lands in the literal cell.
  const PartitionScheme literal =
      syllable5_scheme(Alphabet::of_rank(2), ReadingVariant::Literal, 4);
  const Word g = Word::power(2, 0, 3);
  const CellId cell{CellTag::Syllable, 2};
  const auto witness = literal.witness(cell, Side::Left);
  ok &= require(witness.size() == 4, "expected four left translates", details);
  for (const Word& f : witness) {
    const Word probe = mul(f.inverse(), g);
    ok &= require(!literal.coverage_member(cell, Side::Left, probe),
                  "a probe of a^3 unexpectedly hit the literal cell", details);
  }
  // ... while the corrected reading does cover a^3 from the same witness.
  const PartitionScheme corrected =
      syllable5_scheme(Alphabet::of_rank(2), ReadingVariant::Corrected, 4);
  bool covered = false;
  for (const Word& f : corrected.witness(cell, Side::Left))
    covered = covered || corrected.coverage_member(cell, Side::Left, mul(f.inverse(), g));
  ok &= require(covered, "corrected reading fails to cover a^3", details);
  return ok;
}

// --- criterion 5: lifted cells ----------------------------------------------

bool lifted_cells(std::string& details) {
  RunConfig config;
  config.construction = "lifted";
  config.rank = 3;
  config.radius = 4;
  config.m_max = 3;
  config.jobs = 8;
  const ReportDocument doc = tracked_run(config);
  bool ok = require(doc.domain.at("size") == "937", "unexpected ball size", details);
  ok &= require(doc.pass(), "lifted coverage failed", details);
  return ok;
}

// --- criterion 6: filtration cells on the 4096-element model -----------------

bool filtration_model(std::string& details) {
  RunConfig config;
  config.construction = "filtration";
  config.base = 4;
  config.levels = 9;
  config.pi_seed = 0;
  config.jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  const ReportDocument doc = tracked_run(config);
  const double elapsed = seconds_since(start);

  bool ok = require(doc.domain.at("size") == "4096", "unexpected carrier size", details);
  ok &= require(doc.checks.size() == 4, "expected four structural checks", details);
  for (const auto& chk : doc.checks) ok &= require(chk.pass, chk.name + " failed", details);
  ok &= require(doc.records.size() == 8, "expected one record per level", details);
  for (const auto& rec : doc.records)
    ok &= require(rec.failure_count == 0, "coverage failure at " + rec.cell, details);
  ok &= require(elapsed < 5.0, "run took " + std::to_string(elapsed) + "s", details);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    config.pi_seed = seed;
    const ReportDocument shuffled = tracked_run(config);
    ok &= require(shuffled.pass(), "shuffled addressing seed " + std::to_string(seed) + " failed",
                  details);
  }
  return ok;
}

// --- criterion 7: dichotomy oracle -------------------------------------------

bool dichotomy_small_groups(std::string& details) {
  bool ok = true;
  for (const char* group : {"z8", "z6", "d8"}) {
    RunConfig config;
    config.construction = "dichotomy";
    config.group = group;
    const ReportDocument doc = tracked_run(config);
    ok &= require(doc.pass(), std::string("counterexample on ") + group, details);
  }
  return ok;
}

// --- criterion 8: witness optimality -----------------------------------------

bool greedy_no_larger(const PartitionScheme& scheme, const std::vector<Word>& domain,
                      std::string& details) {
  const GroupOps<Word> ops = word_ops();
  bool ok = true;
  for (const CellId& cell : scheme.report_cells) {
    if (cell.tag == CellTag::Remainder) continue;
    for (Side side : scheme.claimed_sides()) {
      const auto declared = scheme.witness(cell, side);
      const std::function<bool(const Word&)> member = [&scheme, cell, side](const Word& g) {
        return scheme.coverage_member(cell, side, g);
      };
      const auto greedy = min_witness<Word>(side, declared, member, domain, ops,
                                            WitnessSearchMode::Greedy);
      ok &= require(greedy.size() <= declared.size(),
                    "greedy exceeded the declared witness for " + scheme.kind + "/" +
                        cell_name(cell),
                    details);
    }
  }
  return ok;
}

bool witness_optimality(std::string& details) {
  const PartitionScheme letters2 = letter3_scheme(Alphabet::of_rank(2));
  const std::function<bool(const Word&)> member = [&letters2](const Word& g) {
    return letters2.coverage_member({CellTag::Letter, 0}, Side::Left, g);
  };
  const auto exact = min_witness<Word>(Side::Left, enumerate_ball(letters2.alphabet, 2), member,
                                       enumerate_ball(letters2.alphabet, 4), word_ops(),
                                       WitnessSearchMode::Exact);
  bool ok = require(exact.size() == 2, "exact minimum is not 2", details);

  ok &= greedy_no_larger(letter3_scheme(Alphabet::of_rank(4)),
                         enumerate_ball(Alphabet::of_rank(4), 6), details);
  PairedAlphabet pairing{{{0, 1}, {2, 3}, {4, 5}}};
  ok &= greedy_no_larger(
      paired4_scheme(Alphabet::paired(3), pairing, ReadingVariant::Corrected),
      enumerate_ball(Alphabet::paired(3), 5), details);
  ok &= greedy_no_larger(syllable3_scheme(Alphabet::of_rank(2), 0, 1, 5),
                         enumerate_ball(Alphabet::of_rank(2), 8), details);
  ok &= greedy_no_larger(syllable5_scheme(Alphabet::of_rank(2), ReadingVariant::Corrected, 4),
                         enumerate_ball(Alphabet::of_rank(2), 6), details);
  const GeneratorMap map(Alphabet::of_rank(3), Alphabet::of_rank(2),
                         {Word::generator(2, 0), Word::generator(2, 1), Word(2)});
  const GeneratorMap section(Alphabet::of_rank(2), Alphabet::of_rank(3),
                             {Word::generator(3, 0), Word::generator(3, 1)});
  ok &= greedy_no_larger(lift_scheme(map, section, syllable3_scheme(Alphabet::of_rank(2), 0, 1, 3)),
                         enumerate_ball(Alphabet::of_rank(3), 4), details);
  return ok;
}

// --- criterion 9: integer actions --------------------------------------------

bool integer_actions(std::string& details) {
  bool ok = true;
  const struct {
    const char* set;
    int trials;
  } batches[] = {{"evens", 34}, {"mult3", 33}, {"primes", 33}};
  for (const auto& batch : batches) {
    RunConfig config;
    config.construction = "gspace-refute";
    config.set_name = batch.set;
    config.trials = batch.trials;
    config.prefix = 10000;
    config.seed = 1;
    const ReportDocument doc = tracked_run(config);
    ok &= require(doc.pass(), std::string("unverified refutation witness on ") + batch.set,
                  details);
  }

  RunConfig cells;
  cells.construction = "gspace-cells";
  cells.levels = 5;
  cells.prefix = 10000;
  const ReportDocument doc = tracked_run(cells);
  bool cells_ok = require(doc.records.size() == 5, "expected five cells", details);
  for (const auto& rec : doc.records)
    cells_ok &= require(rec.failure_count == 0, "inexact coverage in " + rec.cell, details);
  return ok && cells_ok;
}

// --- criterion 10: byte-identical reports across thread counts ---------------

bool determinism(std::string& details) {
  bool ok = true;
  for (RunConfig config : g_determinism_configs) {
    config.jobs = 1;
    const std::string serial = to_json(run(config));
    config.jobs = 8;
    const std::string parallel = to_json(run(config));
    ok &= require(serial == parallel,
                  "report for " + config.construction + " differs across thread counts", details);
  }
  return ok && require(!g_determinism_configs.empty(), "no runs recorded", details);
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<bool(std::string&)> check;
  } criteria[] = {
      {"first-letter cells cover the radius-6 ball in rank 4", letter_cells_full_scale},
      {"pair cells: disjoint families, two-sided coverage, literal reading fails",
       pair_cells_both_variants},
      {"syllable cells cover the radius-8 ball for lengths 1..5", syllable_cells_left},
      {"two-sided syllable cells pass corrected, literal misses a^3", twosided_syllable_cells},
      {"lifted cells cover the rank-3 ball with lifted witnesses", lifted_cells},
      {"filtration model: factorization, stability, disjointness, coverage", filtration_model},
      {"dichotomy oracle: disjoint large pairs always cover z8, z6, d8",
       dichotomy_small_groups},
      {"witness optimality: exact minimum 2, greedy never beats declared",
       witness_optimality},
      {"integer actions: refutation witnesses verify, dyadic cells exact", integer_actions},
      {"determinism: byte-identical reports for 1 and 8 worker threads", determinism},
  };

  int failed = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    std::string details;
    bool ok = false;
    try {
      ok = criterion.check(details);
    } catch (const std::exception& e) {
      details = e.what();
    }
    if (!ok) ++failed;
    std::printf("[%2d/10] %-72s %s\n", index, criterion.name, ok ? "PASS" : "FAIL");
    if (!ok && !details.empty()) std::printf("        -> %s\n", details.c_str());
  }
  if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
