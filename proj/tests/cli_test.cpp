// End-to-end checks against the real CLI binary (path passed via --cli).
// Plain pass/fail harness: every check prints one line, exit is nonzero if
// anything failed.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& label) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << '\n';
  if (!ok) ++failures;
}

struct Outcome {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

Outcome run(const std::string& cmd) {
  Outcome result;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << '\n';
    return result;
  }
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  if (cli.empty()) {
    std::cerr << "usage: cli_test --cli <path-to-binary>\n";
    return 2;
  }

  {
    const Outcome r = run(cli + " --help");
    check(r.exit_code == 0, "--help exits 0");
    check(contains(r.output, "generate") && contains(r.output, "bench"),
          "--help lists both subcommands");
  }
  {
    const Outcome r = run(cli + " generate --model \"3^4 t=5\"");
    check(r.exit_code == 1, "invalid strength exits 1");
    check(contains(r.output, "error"), "invalid strength reports an error");
  }
  {
    const Outcome r = run(cli + " generate --no-such-flag");
    check(r.exit_code == 1, "unknown flag exits 1");
  }
  {
    const Outcome r = run(cli + " bogus-subcommand");
    check(r.exit_code == 1, "unknown subcommand exits 1");
  }
  {
    const Outcome r = run(cli +
                          " generate --model \"2^2 t=2\" --runs 1 --pop 20 "
                          "--gens 20 --seed 3");
    check(r.exit_code == 0, "2^2 pairwise generation exits 0");
    check(count_lines(r.output) == 5, "2^2 CSV is a header plus 4 rows");
    check(r.output.rfind("p0,p1\n", 0) == 0, "CSV header names parameters");
  }
  {
    const Outcome r = run(cli +
                          " generate --model \"2^2 t=2\" --pop 20 --gens 20 "
                          "--format json --verify");
    check(r.exit_code == 0, "JSON generation with --verify exits 0");
    check(contains(r.output, "verification OK"),
          "--verify reports completeness");
    // stderr is interleaved; parse from the first brace.
    const auto brace = r.output.find('{');
    check(brace != std::string::npos, "JSON output present");
    if (brace != std::string::npos) {
      const auto doc =
          nlohmann::ordered_json::parse(r.output.substr(brace));
      check(doc["schema_version"] == 1, "schema_version is 1");
      check(doc["suite"]["size"] == 4, "JSON suite size is 4");
      check(doc["runs_summary"]["runs"] == 1, "runs_summary embedded");
    }
  }
  {
    // C(12,6) * 10^6 tuples ~ 116MB of flags; far beyond a 1MB budget.
    const Outcome r = run(cli +
                          " generate --model \"10^12 t=6\" "
                          "--memory-budget 1000000");
    check(r.exit_code == 2, "capacity overrun exits 2");
    check(contains(r.output, "error"), "capacity overrun reports an error");
  }
  {
    const Outcome r = run(cli +
                          " generate --model \"2^2 t=2\" --pop 2 --gens 1 "
                          "--stall-limit 1 --seed 19 --runs 30");
    check(r.exit_code == 2 || r.exit_code == 0,
          "hopeless config exits 0 or 2, never crashes");
  }
  {
    const Outcome r = run(cli +
                          " generate --model \"3^4 t=2\" --pop 30 --gens 30 "
                          "--seed 5 --out cli_test_tmp");
    check(r.exit_code == 0, "--out generation exits 0");
    const std::string csv = read_file("cli_test_tmp.csv");
    const std::string json = read_file("cli_test_tmp.json");
    check(csv.rfind("p0,p1,p2,p3\n", 0) == 0, "--out CSV written");
    check(!json.empty() && json[0] == '{', "--out JSON written");
    std::remove("cli_test_tmp.csv");
    std::remove("cli_test_tmp.json");
  }
  {
    std::ofstream models("cli_test_tmp.models");
    models << "2^2 t=2\n3^4 t=2\n";
    models.close();
    const Outcome r = run(cli + " generate --model cli_test_tmp.models");
    check(r.exit_code == 1, "multi-model file for generate exits 1");
    check(contains(r.output, "exactly one"),
          "multi-model error explains itself");
    std::remove("cli_test_tmp.models");
  }
  {
    std::ofstream names("cli_test_tmp.names");
    names << "a0,a1\nb0,b1\n";
    names.close();
    const Outcome r = run(cli +
                          " generate --model \"2^2 t=2\" --pop 20 --gens 20 "
                          "--names cli_test_tmp.names");
    check(r.exit_code == 0, "--names generation exits 0");
    check(contains(r.output, "a0") && contains(r.output, "b1"),
          "--names substitutes symbolic values");
    std::remove("cli_test_tmp.names");
  }
  {
    const Outcome r = run(cli +
                          " bench --systems S1 --runs 1 --pop 15 --gens 15 "
                          "--engine imfpa --out cli_test_bench.json");
    check(r.exit_code == 0, "bench smoke run exits 0");
    check(contains(r.output, "S1"), "bench table names the system");
    check(contains(r.output, "imfpa best"), "bench table has engine columns");
    const std::string json = read_file("cli_test_bench.json");
    check(contains(json, "\"ITCH\": null"), "bench JSON keeps NA as null");
    std::remove("cli_test_bench.json");
  }
  {
    const Outcome r = run(cli + " bench --systems S1 --all --runs 1");
    check(r.exit_code == 1, "--all with --systems exits 1");
  }

  std::cout << (failures == 0 ? "all CLI checks passed\n"
                              : "CLI checks FAILED\n");
  return failures == 0 ? 0 : 1;
}
