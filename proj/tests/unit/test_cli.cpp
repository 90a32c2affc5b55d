#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcd/cli.hpp"
#include "lcd/io.hpp"

using namespace lcd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "lcd_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("analyze") {
  const auto r = run({"analyze", "-"}, "6 2\n111000\n111111\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("d=3 lcd=true") != std::string::npos);
  CHECK(r.out.find("weight_enumerator=1 0 0 2 0 0 1") != std::string::npos);
  const auto bad = run({"analyze", "-"}, "3 2\n110\n110\n");
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.rfind("ERROR parse: line 1", 0) == 0);
  CHECK(run({"analyze", "/nonexistent/file"}).err.rfind("ERROR io:", 0) == 0);
}

TEST_CASE("classify writes a database and prints the count") {
  const auto path = scratch("c17.db").string();
  const auto r = run({"classify", "--n", "17", "--k", "4", "--dmin", "8", "--dual-dmin", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out == "count=2\n");
  CHECK(parse_code_records(slurp(path)).size() == 2);
  CHECK(slurp(path).find("# generated ") != std::string::npos);

  const auto a = run({"classify", "--n", "12", "--k", "4", "--dmin", "4", "--out", "-", "--reproducible"});
  const auto b = run({"classify", "--n", "12", "--k", "4", "--dmin", "4", "--out", "-", "--reproducible",
                      "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# generated") == std::string::npos);
  CHECK(a.err.find("count=") != std::string::npos);
}

TEST_CASE("scale guard and usage errors") {
  const auto r = run({"classify", "--n", "40", "--k", "4", "--dmin", "8", "--out", "-"});
  CHECK(r.code == kExitScaleGuard);
  CHECK(r.err.rfind("ERROR scale-guard:", 0) == 0);
  CHECK(run({"classify", "--n", "10"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("dlcd") {
  const auto r = run({"dlcd", "--n", "8", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("table") {
  const auto seeds = scratch("seeds.tsv");
  const auto ceil = scratch("ceil.tsv");
  std::ofstream(seeds) << "23 7 9\n";
  std::ofstream(ceil) << "25 7 10\n";
  const auto r = run({"table", "--nmax", "25", "--seeds", seeds.string(), "--ceilings", ceil.string(),
                      "--out", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("25\t7\t10\t10\texact\tL:odd-witness-2(23,7)") != std::string::npos);
  std::ofstream(seeds) << "10 2 4\n";
  const auto bad = run({"table", "--nmax", "12", "--seeds", seeds.string(), "--out", "-"});
  CHECK(bad.code == kExitVerification);
  CHECK(bad.err.rfind("ERROR contradiction:", 0) == 0);
}

TEST_CASE("construct") {
  const std::string code = "4 2\n1100\n0110\n";
  auto r = run({"construct", "--op", "extend-parity", "--in", "-"}, code);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("5 2\n", 0) == 0);
  CHECK(run({"analyze", "-"}, r.out).out.find("d=2 lcd=true") != std::string::npos);
  r = run({"construct", "--op", "duplicate-column", "--in", "-", "--v", "11"}, "2 2\n10\n01\n");
  CHECK(r.out == "4 2\n1101\n0011\n");
  r = run({"construct", "--op", "puncture", "--in", "-", "--coord", "0"}, "3 2\n110\n011\n");
  CHECK(r.out == "2 2\n10\n01\n");
  r = run({"construct", "--op", "shorten", "--in", "-", "--coord", "0"}, "3 2\n110\n011\n");
  CHECK(r.out == "2 1\n11\n");
  CHECK(run({"construct", "--op", "shorten", "--in", "-", "--coord", "7"}, code).code == kExitUsage);
  CHECK(run({"construct", "--op", "extend-parity", "--in", "-"}, "3 3\n100\n010\n001\n").code == kExitUsage);
  CHECK(run({"construct", "--op", "rotate", "--in", "-"}, code).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "prop2", "--trials", "50", "--seed", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "suite=prop2 trials=50 failures=0 PASS\n");
  CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
}
