#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "test_util.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
RunResult run(const std::string& args) {
  const std::string cmd = std::string("'") + PHONOFUSE_CLI + "' " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kFixture = std::string(PHONOFUSE_REPO_DATA) + "/fixture_corpus";

}  // namespace

TEST_CASE("cli: stem") {
  const auto r = run("stem significant significance president");
  CHECK(r.status == 0);
  CHECK(r.out == "significant\tsignific\nsignificance\tsignific\npresident\tpresid\n");
  CHECK(run("stem Bad-Word").status == 1);
}

TEST_CASE("cli: prune") {
  auto r = run("prune --classes vowel,plosive agreement");
  CHECK(r.status == 0);
  CHECK(r.out == "A G I A T\n");
  r = run("prune announced affairs");
  CHECK(r.out == "A A T\nA E\n");
  r = run("prune --classes vowel,fricative affairs");
  CHECK(r.out == "A F E Z\n");
  CHECK(run("prune --classes vowel,stop affairs").status == 1);
  CHECK(run("prune sunderkand").status == 2);
}

TEST_CASE("cli: phonemize and normalize") {
  auto r = run("phonemize --stress about");
  CHECK(r.status == 0);
  CHECK(r.out == "AH0 B AW1 T\n");
  CHECK(run("phonemize about").out == "AH B AW T\n");
  r = run("normalize \"I couldn't see the Vice President\"");
  CHECK(r.status == 0);
  CHECK(r.out == "see vice president\n");
}

TEST_CASE("cli: detect") {
  testutil::TempDir dir;
  testutil::write_file(dir.path() / "t.txt", "one mountain town\n");
  const auto r = run("detect --transcript '" + (dir.path() / "t.txt").string() + "' --keyword announced");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "baseline 0 false true\n"
        "stem 0 false true\n"
        "vowel_plosive 1 true true\n"
        "vowel_fricative 0 false true\n"
        "fused true\n");
  CHECK(run("detect --transcript '" + (dir.path() / "t.txt").string() + "' --keyword the").status == 1);
  CHECK(run("detect --transcript '" + (dir.path() / "missing.txt").string() + "' --keyword sun").status == 2);
}

TEST_CASE("cli: evaluate") {
  const auto expected = testutil::read_file(std::string(PHONOFUSE_REPO_DATA) + "/fixture_expected_report.json");
  auto r = run("evaluate --jobs 2 --dataset '" + kFixture + "'");
  CHECK(r.status == 0);
  CHECK(r.out == expected);

  testutil::TempDir dir;
  const auto out = (dir.path() / "r.csv").string();
  r = run("evaluate --format csv --dataset '" + kFixture + "' --out '" + out + "'");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(testutil::read_file(out).starts_with("category,n_samples,"));

  CHECK(run("evaluate --dataset missing/").status == 2);
  CHECK(run("evaluate --format xml --dataset '" + kFixture + "'").status == 1);
  CHECK(run("evaluate --channels baseline --dataset '" + kFixture + "'").status == 1);
}

TEST_CASE("cli: usage errors") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("stem --bogus x").status == 1);
  CHECK(run("--help").status == 0);
  CHECK(run("--version").out.find("0.1.0") != std::string::npos);
}
