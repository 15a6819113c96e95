// End-to-end tests for the command-line tool: golden output for every
// subcommand, exit-code contract, JSON round trips, and reproducibility.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "harness.hpp"
#include "json.hpp"
#include "polyseq/pseq.hpp"

using namespace polyseq;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// run the binary with the given arguments, capture stdout and the exit code
RunResult run(const std::string& args) {
  const std::string cmd = std::string(POLYSEQ_BIN) + " " + args + " > cli_out.tmp 2> cli_err.tmp";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp("cli_out.tmp");
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

void test_compute_text() {
  RunResult r = run("compute --n 3");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.out, std::string("3x+4\n"));

  CHECK_EQ(run("compute --n 1").out, std::string("1\n"));
  CHECK_EQ(run("compute --n 5 --basis binomial").out, std::string("10C(x,2)+30C(x,1)+32\n"));
  CHECK_EQ(run("compute --n 9").out, std::string("9x^4+174x^3+1323x^2+4614x+6144\n"));

  // a multi-polynomial listing labels every line
  RunResult multi = run("compute --n-max 4");
  CHECK_EQ(multi.exit_code, 0);
  CHECK_EQ(multi.out, std::string("P_1 = 1\nP_2 = 1\nP_3 = 3x+4\nP_4 = 2x+4\n"));
}

void test_bfile() {
  // descending keeps each row highest order first
  CHECK_EQ(run("export --n-max 3 --order descending").out, std::string("1 1\n2 1\n3 3\n4 4\n"));
  // ascending reverses within a row; indices never restart
  CHECK_EQ(run("export --n-max 3 --order ascending").out, std::string("1 1\n2 1\n3 4\n4 3\n"));
  CHECK_EQ(run("compute --n 7 --format bfile --order descending").out,
           std::string("1 7\n2 77\n3 294\n4 384\n"));

  // the index column is gapless from 1 across rows of growing width
  std::vector<std::string> rows = lines_of(run("export --n-max 12 --order descending").out);
  CHECK_EQ(rows.size(), size_t(42));  // sum of (m + 1) over n = 1..12
  for (size_t i = 0; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    long idx = 0;
    std::string value;
    in >> idx >> value;
    CHECK_EQ(idx, long(i + 1));
    CHECK(!value.empty());
  }

  // binomial rows flatten the same way: P_5 contributes 10, 30, 32
  CHECK_EQ(run("export --n-max 5 --basis binomial --order descending").out,
           std::string("1 1\n2 1\n3 3\n4 4\n5 2\n6 4\n7 10\n8 30\n9 32\n"));
}

void test_usage_errors() {
  CHECK_EQ(run("export --n-max 3").exit_code, 2);              // b-file needs --order
  CHECK_EQ(run("export --n-max 0 --order descending").exit_code, 2);
  CHECK_EQ(run("export --order descending").exit_code, 2);     // --n-max required
  CHECK_EQ(run("compute --n 3 --n-max 5").exit_code, 2);       // exactly one selector
  CHECK_EQ(run("compute").exit_code, 2);
  CHECK_EQ(run("compute --n 3 --order ascending").exit_code, 2);  // --order is b-file only
  CHECK_EQ(run("compute --n 3 --format yaml").exit_code, 2);
  CHECK_EQ(run("verify").exit_code, 2);
  CHECK_EQ(run("verify --all --conjecture 2").exit_code, 2);
  CHECK_EQ(run("verify --conjecture 9").exit_code, 2);
  CHECK_EQ(run("verify --identity 99.9").exit_code, 2);
  CHECK_EQ(run("frobnicate").exit_code, 2);
  CHECK_EQ(run("").exit_code, 2);  // a subcommand is required
}

void test_output_path() {
  CHECK_EQ(run("compute --n 3 --output /nonexistent/dir/out.txt").exit_code, 3);

  RunResult r = run("compute --n 3 --output cli_file.tmp");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.out, std::string(""));  // everything went to the file
  CHECK_EQ(slurp("cli_file.tmp"), std::string("3x+4\n"));
}

void test_verify() {
  CHECK_EQ(run("verify --identity 8.7 --n-max 60").exit_code, 0);

  // one record per applicable n: the indices where a rational root exists
  RunResult c4 = run("verify --conjecture 4 --n-max 12 --format json");
  CHECK_EQ(c4.exit_code, 0);
  std::vector<std::string> lines = lines_of(c4.out);
  CHECK_EQ(lines.size(), size_t(5));  // n = 3, 4, 8, 12 and the summary
  const long expected_n[] = {3, 4, 8, 12};
  for (int i = 0; i < 4; ++i) {
    json j = json::parse(lines[size_t(i)]);
    CHECK_EQ(j["kind"].get<std::string>(), std::string("conjecture"));
    CHECK_EQ(j["id"].get<std::string>(), std::string("4"));
    CHECK_EQ(j["n_lo"].get<long>(), expected_n[i]);
    CHECK_EQ(j["n_hi"].get<long>(), expected_n[i]);
    CHECK_EQ(j["status"].get<std::string>(), std::string("verified"));
  }
  json summary = json::parse(lines[4]);
  CHECK_EQ(summary["summary"]["checks"].get<long>(), 4L);
  CHECK_EQ(summary["summary"]["refuted"].get<long>(), 0L);

  // the whole suite at a small bound: 28 identities + 7 conjecture sweeps
  RunResult all = run("verify --all --n-max 12 --k-max 10");
  CHECK_EQ(all.exit_code, 0);
  CHECK(all.out.find("summary: 35 checks, 0 refuted, 0 inconclusive") != std::string::npos);

  // a capped root sweep reports inconclusive without failing the run
  RunResult capped = run("verify --conjecture 4 --n-max 45 --divisor-cap 1000");
  CHECK_EQ(capped.exit_code, 0);
  CHECK(capped.out.find("inconclusive") != std::string::npos);

  CHECK_EQ(run("identities --n-max 20 --k-max 10").exit_code, 0);
}

void test_json_round_trip() {
  const int n_max = 40;
  RunResult r = run("compute --n-max " + std::to_string(n_max) + " --format json");
  CHECK_EQ(r.exit_code, 0);
  std::vector<std::string> lines = lines_of(r.out);
  CHECK_EQ(lines.size(), size_t(n_max));

  PSequence seq = p_sequence(n_max);
  for (int n = 1; n <= n_max; ++n) {
    json j = json::parse(lines[size_t(n - 1)]);
    CHECK_EQ(j["n"].get<long>(), long(n));
    CHECK_EQ(j["basis"].get<std::string>(), std::string("power"));
    const long m = (n - 1) / 2;
    CHECK_EQ(j["degree"].get<long>(), m);

    // coefficients are exact decimal strings, highest order first
    std::vector<ExactRat> asc;
    const json& coeffs = j["coefficients"];
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      asc.emplace_back(ExactInt(it->get<std::string>()));
    CHECK_EQ(Poly(asc), seq.at(n));
    CHECK_EQ(ExactInt(j["content"].get<std::string>()), seq.at(n).content());
  }

  // binomial-basis records carry the other coefficient row
  json j5 = json::parse(run("compute --n 5 --basis binomial --format json").out);
  CHECK_EQ(j5["coefficients"].dump(), std::string("[\"10\",\"30\",\"32\"]"));
  CHECK_EQ(j5["basis"].get<std::string>(), std::string("binomial"));
}

void test_reproducible() {
  const std::string args = "verify --all --n-max 10 --k-max 8 --format json";
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK_EQ(first.exit_code, 0);
  CHECK_EQ(first.out, second.out);
}

}  // namespace

int main() {
  test_compute_text();
  test_bfile();
  test_usage_errors();
  test_output_path();
  test_verify();
  test_json_round_trip();
  test_reproducible();
  return harness::summary("cli");
}
