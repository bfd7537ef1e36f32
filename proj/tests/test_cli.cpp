#include "doctest.h"

#include <string>

#include "cli_harness.hpp"
#include "json.hpp"

using gridloc::test::run_process;

namespace {

const std::string kCli = GRIDLOC_CLI_PATH;
const std::string kMutant = GRIDLOC_MUTANT_PATH;
const std::string kFixtures = GRIDLOC_FIXTURE_DIR;
const std::string kGolden = GRIDLOC_GOLDEN_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

int exit_of(const std::string& exe, const std::string& args) {
  return run_process(exe + " " + args + " 2>/dev/null").exit_code;
}

}  // namespace

TEST_CASE("golden outputs") {
  const auto outcomes = gridloc::test::run_golden_cases(kCli, kFixtures, kGolden, false);
  REQUIRE(outcomes.size() >= 20);
  for (const auto& o : outcomes) {
    INFO(o.name << ": " << o.detail);
    CHECK(o.passed);
  }
}

TEST_CASE("standard input is read when no --input is given") {
  const auto r = run_process("printf '2 2\\n11\\n11\\n' | " + kCli + " square --pattern monotone");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "side=2 corner=(1,1)\n");
}

TEST_CASE("usage and input errors exit with 1") {
  CHECK(exit_of(kCli, "") == 1);
  CHECK(exit_of(kCli, "frobnicate") == 1);
  CHECK(exit_of(kCli, "square --pattern spiral --input " + fixture("ones_2x2.txt")) == 1);
  CHECK(exit_of(kCli, "triangle --dir up --input " + fixture("ones_2x2.txt")) == 1);
  CHECK(exit_of(kCli, "square --bogus --input " + fixture("ones_2x2.txt")) == 1);
  CHECK(exit_of(kCli, "depth --input " + fixture("does_not_exist.txt")) == 1);
  CHECK(exit_of(kCli, "perimeter --input " + fixture("real_row.txt")) == 1);
  CHECK(exit_of(kCli, "--help") == 0);
}

TEST_CASE("parse errors name the offending line") {
  const auto r = run_process(kCli + " depth --input " + fixture("bad_grid.txt") + " 2>&1 >/dev/null");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error:") != std::string::npos);
  CHECK(r.out.find("line 3") != std::string::npos);
}

TEST_CASE("oracle refuses inputs beyond its limits") {
  const std::string in = " --input " + fixture("real_tall_13x2.txt");
  CHECK(exit_of(kCli, "perimeter" + in) == 0);
  const auto r = run_process(kCli + " oracle perimeter" + in + " 2>&1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("check agrees on every fixture") {
  const char* grids[] = {"ones_2x2.txt",   "identity_2x2.txt", "chessboard_3x3.txt",
                         "corner_block_3x3.txt", "ones_5x5.txt", "triangle_2x2.txt",
                         "zeros_3x3.txt",  "ring_5x5.txt",     "nested_9x9.txt",
                         "mixed_4x6.txt"};
  for (const char* g : grids) {
    const std::string in = " --input " + fixture(g);
    INFO(g);
    for (const char* p : {"monotone", "chessboard", "identity"})
      CHECK(exit_of(kCli, std::string("check square --pattern ") + p + in) == 0);
    for (const char* d : {"nw", "ne", "sw", "se"})
      CHECK(exit_of(kCli, std::string("check triangle --dir ") + d + in) == 0);
    CHECK(exit_of(kCli, "check diamond" + in) == 0);
    CHECK(exit_of(kCli, "check depth" + in) == 0);
    CHECK(exit_of(kCli, "check depth --swap-connectivity" + in) == 0);
  }
  for (const char* p : {"points_one.txt", "points_corners.txt", "points_none.txt", "points_five.txt"}) {
    INFO(p);
    CHECK(exit_of(kCli, "check empty-rect --input " + fixture(p)) == 0);
  }
  for (const char* r : {"real_ones_2x2.txt", "real_neg_3x3.txt", "real_mixed_4x5.txt"}) {
    INFO(r);
    CHECK(exit_of(kCli, "check perimeter --input " + fixture(r)) == 0);
  }
}

TEST_CASE("check reports a mismatch from the fault-injected build") {
  CHECK(exit_of(kMutant, "check square --pattern identity --input " + fixture("identity_2x2.txt")) == 2);
  CHECK(exit_of(kMutant, "check triangle --dir se --input " + fixture("triangle_2x2.txt")) == 2);
  CHECK(exit_of(kMutant, "check diamond --input " + fixture("ones_5x5.txt")) == 2);
  CHECK(exit_of(kMutant, "check empty-rect --input " + fixture("points_one.txt")) == 2);
  CHECK(exit_of(kMutant, "check perimeter --input " + fixture("real_mixed_4x5.txt")) == 2);
  CHECK(exit_of(kMutant, "check depth --input " + fixture("ones_2x2.txt")) == 2);

  const auto r = run_process(kMutant + " check square --pattern identity --input " +
                             fixture("identity_2x2.txt"));
  CHECK(r.out.rfind("MISMATCH\n", 0) == 0);
  CHECK(r.out.find("input:\n") != std::string::npos);
}

TEST_CASE("json output parses and carries the command name") {
  const char* cmds[] = {"square --pattern chessboard --input ",  "triangle --dir ne --input ",
                        "diamond --input ", "depth --input "};
  for (const char* c : cmds) {
    const auto r = run_process(kCli + " " + c + fixture("mixed_4x6.txt") + " --format json --table");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("command"));
  }
  const auto m = run_process(kMutant + " check depth --format json --input " + fixture("ones_2x2.txt"));
  CHECK(m.exit_code == 2);
  const auto j = nlohmann::json::parse(m.out);
  CHECK(j["agree"] == false);
  CHECK(j.contains("fast"));
  CHECK(j.contains("oracle"));
}

TEST_CASE("bench reports timings") {
  const auto r = run_process(kCli + " bench depth --size 64 --reps 1 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "depth");
  CHECK(j["size"] == 64);
  CHECK(j["seconds"].get<double>() >= 0.0);
}
