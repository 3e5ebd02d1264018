// End-to-end tests of the qvt binary: output text, JSON shape, exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(QVT_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("qbinom prints the polynomial") {
  CHECK(run_cli("qbinom 4 2").out == "1 + q + 2q^2 + q^3 + q^4\n");
  CHECK(run_cli("qbinom 4 2 --mod 4").out == "2 + q + 2q^2 + q^3\n");
  CHECK(run_cli("qbinom 2 3").out == "0\n");
  CHECK(run_cli("qbinom 4 2").exit_code == 0);
}

TEST_CASE("qbinom json is an array of coefficient strings") {
  const json plain = json::parse(run_cli("--format json qbinom 4 2").out);
  CHECK(plain == json({"1", "1", "2", "1", "1"}));
  const json reduced = json::parse(run_cli("--format json qbinom 4 2 --mod 4").out);
  CHECK(reduced["modulus"] == 4);
  CHECK(reduced["coefficients"] == json({"2", "1", "2", "1"}));
}

TEST_CASE("code lists classes and cardinalities") {
  CHECK(run_cli("code 2 2 --m 0 --list").out == "AABB BABA\n");
  CHECK(run_cli("code 2 2 --m 1 --card").out == "closed_form=1 enumerated=1\n");
  CHECK(run_cli("code 2 2 --m 0 --sphere").out == "sphere=6 ratio=3\n");
  CHECK(run_cli("code 2 2 --list").out == "AABB ABAB ABBA BAAB BABA BBAA\n");
  CHECK(run_cli("code 2 2 --card").out == "closed_form=6 enumerated=6\n");
  CHECK(run_cli("code 2 2 --m 0 --dm").out == "1 + q^4\n");
  const json card = json::parse(run_cli("--format json code 2 2 --m 0 --card").out);
  CHECK(card["closed_form"] == "2");
  CHECK(card["enumerated"] == "2");
  CHECK(card["agree"] == true);
  const json words = json::parse(run_cli("--format json code 2 2 --m 0 --list").out);
  CHECK(words == json({"AABB", "BABA"}));
}

TEST_CASE("decode prints the codeword and uses the documented exit codes") {
  auto hit = run_cli("decode 2 2 1 AAB");
  CHECK(hit.out == "BAAB\n");
  CHECK(hit.exit_code == 0);

  // 0/1 synonyms are accepted on input
  CHECK(run_cli("decode 2 2 1 001").out == "BAAB\n");

  auto miss = run_cli("decode 2 2 0 AAA");
  CHECK(miss.out == "NOT_FOUND\n");
  CHECK(miss.exit_code == 3);

  CHECK(run_cli("decode 2 2 0 AABB").exit_code == 2);  // length mismatch
  CHECK(run_cli("decode 2 2 0 AXA").exit_code == 2);   // bad symbol

  const json decoded = json::parse(run_cli("--format json decode 2 2 1 AAB").out);
  CHECK(decoded["decoded"] == "BAAB");
  const json missing = json::parse(run_cli("--format json decode 2 2 0 AAA").out);
  CHECK(missing["decoded"].is_null());
}

TEST_CASE("verify streams reports and a summary") {
  auto result = run_cli("verify dm --max 6");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 16);  // 15 points + summary
  CHECK(lines.front().rfind("PASS dm alpha=1 beta=1", 0) == 0);
  CHECK(lines.back() == "PASS 15/15 checks");

  CHECK(run_cli("verify sphere --max-gamma 3").exit_code == 0);
  CHECK(run_cli("verify decoder --max 5").exit_code == 0);
  CHECK(run_cli("verify rpoly --max 3").exit_code == 0);
  CHECK(run_cli("verify roots --max 3").exit_code == 0);
  CHECK(run_cli("verify cardinality --max 6").exit_code == 0);
}

TEST_CASE("verify json emits one schema-stable object per line") {
  auto result = run_cli("--format json verify dm --max 4");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() >= 2);
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    const json report = json::parse(lines[i]);
    CHECK(report["identity"] == "dm");
    CHECK(report["passed"] == true);
    CHECK(report.contains("point"));
    CHECK(report.contains("expected"));
    CHECK(report.contains("actual"));
    CHECK(report.contains("tolerance"));
    CHECK(report.contains("elapsed_ms"));
    CHECK(report["expected"].is_string());
  }
  const json summary = json::parse(lines.back());
  CHECK(summary["summary"]["failed"] == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("qbinom").exit_code == 2);
  CHECK(run_cli("qbinom 4 2 --wrong").exit_code == 2);
  CHECK(run_cli("qbinom -3 2").exit_code == 2);
  CHECK(run_cli("code 0 2 --list").exit_code == 2);
  CHECK(run_cli("verify nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}
