#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "doctest.h"
#include "helpers.hpp"

using noisygen::cli::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run ngen(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "noisygen-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("closure command") {
    auto r = ngen({"closure", "--collection", testing::data_file("c_ex.col"), "--noise", "1", "--set", "(0,2)"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "consistent: L1 L2\n"));
    CHECK(contains(r.out, "closure: finite:4 {(0,0),(1,0),(0,1),(1,1)}\n"));

    r = ngen({"closure", "--collection", testing::data_file("columns.col"), "--noise", "1", "--set",
              "(0,0) (0,1) (2,5)"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "closure: infinite blocks{0}\n"));

    r = ngen({"closure", "--collection", testing::data_file("c_ex.col"), "--noise", "0"});
    CHECK(contains(r.out, "set: {}\n"));
    CHECK(contains(r.out, "closure: finite:4"));

    r = ngen({"closure", "--collection", testing::data_file("c_ex.col"), "--noise", "0", "--set", "(9,9)"});
    CHECK(contains(r.out, "closure: empty-consistent\n"));
  }

  TEST_CASE("dim command") {
    auto r = ngen({"dim", "--collection", testing::data_file("c_ex.col"), "--noise", "0", "--max-size", "10",
                   "--pool-depth", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict: Exact 4\nwitness: {(0,0),(1,0),(0,1),(1,1)}\npool: 13\n"));
    r = ngen({"dim", "--collection", testing::data_file("c_ex.col"), "--noise", "1"});
    CHECK(contains(r.out, "verdict: Exact 6\n"));
    r = ngen({"dim", "--collection", testing::data_file("columns.col"), "--noise", "1", "--max-size", "20"});
    CHECK(contains(r.out, "verdict: AtLeast 20\n"));
  }

  TEST_CASE("play matches the golden traces") {
    struct Case {
      std::string golden;
      std::vector<std::string> args;
    };
    const std::vector<Case> cases{
        {"c_ex_noisy.trace",
         {"--collection", testing::data_file("c_ex.col"), "--target", "L1", "--noise", "1", "--steps", "10",
          "--noise-strings", "(2,0)", "--seed", "7"}},
        {"l1_only.trace", {"--collection", testing::data_file("l1_only.col"), "--target", "L1", "--noise", "0",
                           "--steps", "5"}},
        {"columns_random.trace",
         {"--collection", testing::data_file("columns.col"), "--target", "0,2", "--noise", "0", "--steps", "12",
          "--schedule", "random", "--seed", "3"}},
        {"c_ex_interleave.trace",
         {"--collection", testing::data_file("c_ex.col"), "--target", "L2", "--noise", "1", "--steps", "12",
          "--noise-strings", "(3,0)", "--schedule", "interleave:4", "--seed", "1"}},
    };
    for (const auto& c : cases) {
      CAPTURE(c.golden);
      const auto path = scratch(c.golden);
      std::vector<std::string> args{"play"};
      args.insert(args.end(), c.args.begin(), c.args.end());
      args.push_back("--trace");
      args.push_back(path.string());
      const auto r = ngen(args);
      CHECK(r.code == 0);
      CHECK(slurp(path) == slurp(testing::golden_file(c.golden)));
      const std::string first = slurp(path);
      CHECK(ngen(args).code == 0);
      CHECK(slurp(path) == first);
    }
  }

  TEST_CASE("play summary and errors") {
    auto r = ngen({"play", "--collection", testing::data_file("c_ex.col"), "--target", "L1", "--noise", "1",
                   "--steps", "10", "--noise-strings", "(2,0)"});
    CHECK(contains(r.out, "settle=0 promised_tstar=6 steps=10 correct=10\n"));
    r = ngen({"play", "--collection", testing::data_file("c_ex.col"), "--target", "L7", "--noise", "1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "unknown target"));
    r = ngen({"play", "--collection", testing::data_file("c_ex.col"), "--target", "L1", "--noise", "1",
              "--noise-strings", "(0,0)"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "noise must lie outside the target"));
  }

  TEST_CASE("refute command") {
    auto r = ngen({"refute", "--horizon", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "case: concentrated\n"));
    CHECK(contains(r.out, "errors: 2 3 4 5 6\n"));
    r = ngen({"refute", "--horizon", "6", "--generator", "fresh-column", "--iterations", "5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "case: scattered\n"));
    CHECK(contains(r.out, "verified: 5/5\n"));
    r = ngen({"refute", "--horizon", "1"});
    CHECK(r.code == 3);
    CHECK(contains(r.out, "case: inconclusive\n"));
    CHECK(ngen({"refute", "--horizon", "0"}).code == 2);
  }

  TEST_CASE("check command") {
    auto r = ngen({"check", "--suite", "refutation", "--trials", "1", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "result: pass\n"));
    CHECK(ngen({"check", "--suite", "nonsense"}).code == 2);
  }

  TEST_CASE("usage and parse errors exit with 2") {
    CHECK(ngen({}).code == 2);
    CHECK(ngen({"closure", "--noise", "1"}).code == 2);
    CHECK(ngen({"closure", "--collection", "/nonexistent.col", "--noise", "1"}).code == 2);
    CHECK(ngen({"closure", "--collection", testing::data_file("c_ex.col"), "--noise", "1", "--set", "(0,2"}).code ==
          2);
    const auto bad = scratch("bad.col");
    std::ofstream(bad) << "collection X\nfamily explicit\nlanguage A\nadd (1,0)\nend\n";
    const auto r = ngen({"closure", "--collection", bad.string(), "--noise", "0"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line "));
  }
}
