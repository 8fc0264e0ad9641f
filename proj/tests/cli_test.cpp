#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "extcat/table.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "extcat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = extcat::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::filesystem::path kGolden = EXTCAT_GOLDEN_DIR;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden sl3 tables") {
  auto r = run({"ext", "--n", "3", "--parabolic", "1", "--target", "proper-standard", "--graded", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(kGolden / "sl3_proper_standard.txt"));

  r = run({"ext", "--n", "3", "--parabolic", "1", "--target", "standard", "--graded"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(kGolden / "sl3_standard.txt"));
}

TEST_CASE("base listing with coordinates") {
  const auto r = run({"base", "--n", "7", "--coords"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> chain;
  for (std::string line; std::getline(lines, line);)
    if (line.find("(4,3,") != std::string::npos) chain.push_back(line);
  CHECK(chain == std::vector<std::string>{"1,2,5,3,4,6,7 (4,3,0)", "1,5,6,2,3,4,7 (4,3,1)",
                                          "5,6,7,1,2,3,4 (4,3,2)"});

  const auto j = run({"base", "--n", "3", "--coords", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out).size() == 4);
}

TEST_CASE("auxiliary commands") {
  CHECK(run({"bm", "--n", "4", "--perm", "4,2,3,1"}).out == "2,3,4,1 (1,3,0)\n4,1,2,3 (3,1,0)\n");
  CHECK(run({"phi", "--n", "4", "--perm", "3,4,1,2"}).out == "4,2,3,1 m=5\n");
  CHECK(run({"socle", "--n", "3", "--perm", "3,2,1", "--from", "2,1,3"}).code == 0);
  CHECK(run({"cells", "--n", "3", "--shape", "2,1"}).out == "2,1: [1,3,2] [2,1,3] [2,3,1] [3,1,2]\n");
}

TEST_CASE("json output round-trips through the command line") {
  const auto r = run({"ext", "--n", "4", "--parabolic", "2", "--target", "standard", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto t = extcat::ext_table_from_json(nlohmann::json::parse(r.out));
  CHECK(t == extcat::build_ext_table(4, extcat::TableKind::standard, extcat::ParabolicSubset(4, {2})));
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "extcat_cli_test.csv";
  const auto r = run({"ext", "--n", "3", "--target", "verma", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path).rfind("x,y,status", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"ext", "--n", "3"}).code == 1);
  CHECK(run({"ext", "--n", "3", "--target", "standard"}).code == 1);
  CHECK(run({"ext", "--n", "3", "--target", "bogus"}).code == 1);
  CHECK(run({"ext", "--n", "3", "--target", "verma", "--parabolic", "1"}).code == 1);
  CHECK(run({"selftest", "--max-n", "2"}).code == 1);

  const auto bad = run({"ext", "--n", "3", "--target", "standard", "--parabolic", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"bm", "--n", "4", "--perm", "1,1,2,3"}).code == 2);
  CHECK(run({"bm", "--n", "4", "--perm", "1,2,3"}).code == 2);
  CHECK(run({"phi", "--n", "3", "--perm", "3,2,1"}).code == 2);
  CHECK(run({"ext", "--n", "2", "--target", "verma"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest at rank 3") {
  const auto r = run({"selftest", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

}
