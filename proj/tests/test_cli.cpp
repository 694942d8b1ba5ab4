// Drives the klmult binary end to end; the binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "klmult/pipeline.hpp"

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("mult: running example, all four methods report 2") {
  RunResult r = run("mult --v 5123746 --w 7531462 --json");
  REQUIRE(r.exit_code == 0);
  klmult::PairReport rep = klmult::report_from_json(r.out);
  CHECK(*rep.mult_tableau == 2);
  CHECK(*rep.mult_det == 2);
  CHECK(*rep.mult_facets == 2);
  CHECK(*rep.mult_degree == 2);
  CHECK(*rep.theta == "4635721");
}

TEST_CASE("mult: Catalan pair") {
  RunResult r = run("mult --v 1234 --w 4231 --json");
  REQUIRE(r.exit_code == 0);
  klmult::PairReport rep = klmult::report_from_json(r.out);
  CHECK(*rep.mult_tableau == 2);
  CHECK(rep.mults_agree());
}

TEST_CASE("mult: non-covexillary pair reports the Groebner failure") {
  RunResult r = run("mult --v 23451 --w 45231 --json");
  REQUIRE(r.exit_code == 0);
  klmult::PairReport rep = klmult::report_from_json(r.out);
  CHECK_FALSE(rep.covexillary);
  CHECK_FALSE(rep.checks.at("groebner_essential_minors"));
  CHECK(rep.mult_degree.has_value());
}

TEST_CASE("exit code 2 on domain errors") {
  CHECK(run("mult --v 7531462 --w 5123746").exit_code == 2);  // v > w
  CHECK(run("mult --v 12345 --w 7531462").exit_code == 2);    // size mismatch
  CHECK(run("mult --v 11 --w 12").exit_code == 2);            // not a bijection
  CHECK(run("hilbert --v 23451 --w 45231").exit_code == 2);   // not covexillary
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("hilbert: running example") {
  RunResult r = run("hilbert --v 5123746 --w 7531462");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("2*(1-t)^7 - (1-t)^8") != std::string::npos);
  CHECK(r.out.find("(1-t)^15") != std::string::npos);
  CHECK(r.out.find("(1-t)^21") != std::string::npos);
}

TEST_CASE("objects: theta, tableaux, pipedreams") {
  CHECK(run("objects --v 5123746 --w 7531462 --kind theta").out == "4635721\n");

  std::string tabs = run("objects --v 5123746 --w 7531462 --kind tableaux").out;
  CHECK(tabs == "1 1 1 1\n2 2\n3\n\n1 1 1 1\n2 3\n3\n\n");

  std::string dreams = run("objects --v 5123746 --w 7531462 --kind pipedreams").out;
  CHECK(dreams ==
        " + . .\n + + .\n + + + +\n\n + . +\n + . .\n + + + +\n\n");

  std::string sv = run("objects --v 5123746 --w 7531462 --kind setvalued --entries 8").out;
  CHECK(sv == "{1} {1} {1} {1}\n{2} {2,3}\n{3}\n\n");
}

TEST_CASE("sweep: covexillary S_4 passes the theorem suite") {
  RunResult r = run("sweep --n 4 --covexillary-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("sweep json output is deterministic across worker counts") {
  // timings vary, so compare the parsed reports with timings cleared
  RunResult one = run("sweep --n 4 --json --workers 1");
  RunResult four = run("sweep --n 4 --json --workers 4");
  REQUIRE(one.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  auto parse_lines = [](const std::string& text) {
    std::vector<klmult::PairReport> reports;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t nl = text.find('\n', pos);
      if (nl == std::string::npos) break;
      auto rep = klmult::report_from_json(text.substr(pos, nl - pos));
      rep.timings_ms.clear();
      reports.push_back(std::move(rep));
      pos = nl + 1;
    }
    return reports;
  };
  auto a = parse_lines(one.out), b = parse_lines(four.out);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("KLMULT_WORKERS env var is honored") {
  RunResult r = run("sweep --n 3 --json");  // plain run for reference
  REQUIRE(r.exit_code == 0);
  std::string cmd = "KLMULT_WORKERS=3 " + g_binary + " sweep --n 3 --json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  REQUIRE(pclose(pipe) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') ==
        std::count(r.out.begin(), r.out.end(), '\n'));
}

TEST_CASE("groebner dump shows the Example 5.5 initial ideal") {
  RunResult r = run("groebner --v 5123746 --w 7531462");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("groebner_basis_already=yes") != std::string::npos);
  CHECK(r.out.find("z[1][3]*z[4][4]") != std::string::npos);
  CHECK(r.out.find("decomposition:") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-klmult>\n");
    return 1;
  }
  g_binary = argv[1];
  doctest::Context ctx;
  return ctx.run();
}
