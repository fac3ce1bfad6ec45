#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcent/cli.hpp"

using namespace mcent;

namespace {

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "mcent");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle)
{
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("shape")
{
  auto r = run({"shape", "--m", "5", "(4,5)(1,*,3)(2)(*)(*,*)"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "shape: (1,*,3)(2)(4,5)(*,*)(*)\n"));
  CHECK(contains(r.out, "size: 9\n"));
  CHECK(contains(r.out, "m1: 1\n"));

  r = run({"shape", "--m", "0", ""});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "size: 0\n"));

  r = run({"shape", "--m", "2", "(1)(3)"});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "3 outside [1,2]"));
  CHECK(contains(r.err, "2 missing"));

  r = run({"shape", "--m", "2", "--pad", "2", "--complete", "7", "(1,*)(2)"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("mult")
{
  auto r = run({"mult", "--m", "2", "--n", "6", "(1,2)(*,*)", "(1)(2)(*,*)"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "1*A[(1,2)(*)(*)] + 3*A[(1,2)(*,*,*)] + 2*A[(1,2)(*,*)(*,*)]"));

  r = run({"mult", "--m", "2", "--n", "6", "--project", "(1,2)(*,*)", "(1)(2)(*,*)"});
  CHECK(contains(r.out, "6*K[(1,2)(*)(*)(*)(*)]"));
  CHECK(contains(r.out, "C(4,2) = 6"));

  r = run({"mult", "--m", "2", "--format", "json", "(1)(2)", "(1,*)(2)"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "\"A\":{\"(1,*)(2)\":\"1\"}"));

  r = run({"mult", "--m", "2", "--n", "3", "(1,2)(*,*)", "(1)(2)"});
  CHECK(r.code == kExitUsage);
  r = run({"mult", "--m", "2", "(1,2)"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("poly")
{
  auto r = run({"poly", "--m", "2", "(1,2)(*,*)", "(1)(2)(*,*)", "(1,2)"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "factored: (n-2)(n-3)/2\n"));
  CHECK(contains(r.out, "degree: 2\n"));
  CHECK(contains(r.out, "bound: 3\n"));

  r = run({"poly", "--m", "2", "(1,2,*)", "(1,*)(2,*)(*,*)", "(1,*,2)(*,*)"});
  CHECK(contains(r.out, "factored: n-5\n"));
  CHECK(contains(r.out, "degree: 1\n"));

  r = run({"poly", "--m", "2", "(1,2,*,*)", "(1)(2,*,*)", "(1,2,*)(*,*)"});
  CHECK(contains(r.out, "bound: 3/2 (integer bound 1)"));

  r = run({"poly", "--m", "2", "(1,2)", "(1,2)", "(1,2)"});
  CHECK(contains(r.out, "binomial: 0\n"));

  r = run({"poly", "--m", "0", "--n", "5", "(*,*)", "(*,*)", ""});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "n(n-1)/2"));

  r = run({"poly", "--m", "2", "(1,2)(*)", "(1,2)", "(1,2)"});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "proper"));
  CHECK(run({"poly", "--m", "2", "--normalize", "(1,2)(*)", "(1,2)", "(1,2)"}).code == kExitOk);
}

TEST_CASE("table")
{
  const auto dir = std::filesystem::temp_directory_path() / "mcent_cli_test";
  std::filesystem::create_directories(dir);
  const auto first = (dir / "a.json").string();
  const auto second = (dir / "b.json").string();
  const auto again = (dir / "c.json").string();

  REQUIRE(run({"table", "--m", "2", "--max-size", "4", "--out", first}).code == kExitOk);
  REQUIRE(run({"table", "--m", "2", "--max-size", "4", "--threads", "3", "--out", second}).code ==
          kExitOk);
  const auto text = slurp(first);
  CHECK(text == slurp(second));
  CHECK(contains(text, "\"lambda\": \"(1,2)(*,*)\",\n      \"delta\": \"(1)(2)(*,*)\",\n"
                       "      \"rho\": \"(1,2)(*,*,*)\",\n      \"k\": \"3\""));
  CHECK(contains(text, "\"rho\": \"(1,2)(*,*)(*,*)\",\n      \"k\": \"2\""));
  CHECK(contains(text, "\"rho\": \"(1,2)(*)(*)\",\n      \"k\": \"1\""));

  REQUIRE(run({"table", "--from", first, "--out", again}).code == kExitOk);
  CHECK(slurp(again) == text);

  auto r = run({"table", "--m", "1", "--max-size", "1", "--format", "csv"});
  CHECK(r.out == "lambda,delta,rho,k\n\"(1)\",\"(1)\",\"(1)\",1\n");

  r = run({"table", "--m", "1", "--max-size", "1", "--out", (dir / "no/such/dir/t.json").string()});
  CHECK(r.code != kExitOk);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify")
{
  auto r = run({"verify", "--suite", "prop-size", "--m", "2", "--max-n", "7"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "= 24 = 2 * 12"));
  r = run({"verify", "--suite", "filtration", "--m", "1", "--max-n", "4", "--random-pairs", "100"});
  CHECK(r.code == kExitOk);
  CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"shape", "--m", "x", "(1)"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
