#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "borda/cli.hpp"
#include "borda/io.hpp"
#include "support/fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bordactl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = borda::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const Run& r, const std::string& line) { return r.out.find(line + "\n") != std::string::npos; }

std::string without_stats(const std::string& report) {
  std::istringstream in(report);
  std::string kept;
  for (std::string line; std::getline(in, line);)
    if (line.rfind("stats.", 0) != 0) kept += line + "\n";
  return kept;
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bordactl-tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("score") {
  const Run av = run({"score", fixture::path("ex1_av.elec")});
  CHECK(av.code == 0);
  CHECK(has_line(av, "score.c1\t0.5"));
  CHECK(has_line(av, "score.c5\t0.5"));
  CHECK(has_line(av, "score.c2\t4"));
  const Run ex2 = run({"score", fixture::path("ex2.inst")});
  CHECK(has_line(ex2, "score.c1\t7"));
  CHECK(has_line(ex2, "score.c2\t3"));
  CHECK(has_line(ex2, "score.c3\t3"));
  CHECK(has_line(ex2, "score.p\t5"));
  CHECK(has_line(ex2, "winners.unique\t{c1}"));
  const Run empty = run({"score", fixture::path("empty.elec")});
  CHECK(has_line(empty, "score.a\t0"));
  CHECK(has_line(empty, "winners.unique\t{}"));
  CHECK(has_line(empty, "winners.cowinner\t{a,b,p}"));
}

TEST_CASE("solve") {
  const Run ex2 = run({"solve", fixture::path("ex2.inst"), "--solver", "brute"});
  CHECK(ex2.code == 0);
  CHECK(has_line(ex2, "solution\t{v3}"));
  CHECK(has_line(ex2, "score_after.c1\t4"));
  CHECK(has_line(ex2, "score_after.p\t5"));
  const Run ex6 = run({"solve", fixture::path("ex6.inst"), "--solver", "brute"});
  CHECK(has_line(ex6, "solution\t{c3}"));
  const Run fpt = run({"solve", fixture::path("ex2_up.inst"), "--solver", "fpt"});
  CHECK(fpt.code == 0);
  CHECK(has_line(fpt, "solver\tfpt-ccdv"));
  const Run autod = run({"solve", fixture::path("ex7.inst")});
  CHECK(has_line(autod, "solver\tbrute"));
  CHECK(has_line(autod, "solution\t{c1}"));
  CHECK(run({"verify", fixture::path("ex7.inst"), "c3"}).code == 0);
}

TEST_CASE("infeasible solve exits 1 and omits the after table") {
  const std::string path = scratch("tight.inst");
  borda::ControlInstance inst = fixture::instance("ex2.inst");
  inst.budget = 0;
  borda::write_file(path, borda::serialize(inst));
  const Run r = run({"solve", path});
  CHECK(r.code == 1);
  CHECK(has_line(r, "feasible\tfalse"));
  CHECK(has_line(r, "solution\tnone"));
  CHECK(r.out.find("score_after.") == std::string::npos);
}

TEST_CASE("model flag") {
  const std::string path = scratch("tie.inst");
  borda::write_file(path,
                    "election 2 1 up\nspecial p\ncandidates p a\nkind ccdv\nbudget 0\n1: p\n1: a\n");
  CHECK(run({"solve", path}).code == 1);
  CHECK(run({"solve", path, "--model", "cowinner"}).code == 0);
}

TEST_CASE("fpt requested without an algorithm") {
  const std::string graph = fixture::path("k3.graph");
  const std::string out = scratch("k3-2ccdc.inst");
  REQUIRE(run({"reduce", graph, "1", "2ccdc-down", "--out", out}).code == 0);
  const Run r = run({"solve", out, "--solver", "fpt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("no FPT algorithm exists for this problem class") != std::string::npos);
}

TEST_CASE("verify") {
  const Run good = run({"verify", fixture::path("ex4.inst"), "c3"});
  CHECK(good.code == 0);
  CHECK(has_line(good, "verdict\ttrue"));
  const Run tie = run({"verify", fixture::path("ex4.inst"), "c2"});
  CHECK(tie.code == 1);
  CHECK(has_line(tie, "verdict\tfalse"));
  CHECK(has_line(tie, "score_after.p\t2"));
  CHECK(has_line(tie, "score_after.c1\t2"));
  const Run over = run({"verify", fixture::path("ex4.inst"), "c2", "c3"});
  CHECK(has_line(over, "reason\tbudget"));
  const Run bad = run({"verify", fixture::path("ex5.inst"), "p"});
  CHECK(bad.code == 1);
  CHECK(has_line(bad, "reason\tthe special candidate cannot be deleted"));
}

TEST_CASE("reduce") {
  const std::string out = scratch("k3-2ccac-up.inst");
  const Run printed = run({"reduce", fixture::path("k3.graph"), "1", "2ccac-up", "--out", out, "--as-printed"});
  CHECK(printed.code == 0);
  CHECK(has_line(printed, "size.Y\t3"));
  CHECK(has_line(printed, "size.votes\t12"));
  const Run repaired = run({"reduce", fixture::path("k3.graph"), "1", "2ccac-up", "--out", out});
  CHECK(has_line(repaired, "size.Y\t4"));
  const auto witness = borda::parse_witness(borda::read_file(out + ".witness"));
  CHECK(witness.size() == 3);
  CHECK(run({"solve", out}).code == 0);

  const Run path = run({"reduce", fixture::path("p4.graph"), "1", "2ccdc-up", "--out", out});
  CHECK(path.code == 2);
  CHECK(path.err.find("regular") != std::string::npos);

  const Run ccdv = run({"reduce", fixture::path("k3.graph"), "1", "ccdv", "--out", out});
  CHECK(ccdv.code == 0);
  CHECK(has_line(ccdv, "size.q\t3"));
  CHECK(run({"reduce", fixture::path("p4.graph"), "2", "ccdv", "--out", out}).code == 2);
  CHECK(run({"reduce", fixture::path("p4.graph"), "2", "ccdv", "--out", out, "--force"}).code == 0);
}

TEST_CASE("gen is byte-stable") {
  const std::vector<std::string> args{"gen", "--seed", "9", "--m", "5", "--n", "6", "--t", "3",
                                      "--rule", "av", "--kind", "ccav", "--budget", "2", "--pool", "4"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(borda::parse_instance(a.out).pool_votes.size() == 4);
  auto bad = args;
  bad[8] = "9";
  CHECK(run(bad).code == 2);
}

TEST_CASE("reports are deterministic apart from stats") {
  for (const char* name : {"ex2.inst", "ex3.inst", "ex5.inst"}) {
    const Run a = run({"solve", fixture::path(name)});
    const Run b = run({"solve", fixture::path(name)});
    CHECK(without_stats(a.out) == without_stats(b.out));
  }
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"solve", fixture::path("ex2.inst"), "--solver", "magic"}).code == 2);
  CHECK(run({"solve", fixture::path("missing.inst")}).code == 2);
  const Run parse = run({"score", fixture::path("bad.elec")});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 4") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
