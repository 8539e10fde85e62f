// fpcov command-line front end: `fpcov generate` builds one covering suite,
// `fpcov bench` runs the published-table comparison harness.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fpcov/bench.hpp"
#include "fpcov/errors.hpp"
#include "fpcov/generator.hpp"
#include "fpcov/report.hpp"
#include "fpcov/verify.hpp"

namespace {

constexpr int kExitUsage = 1;         // bad flags, bad model, bad config
constexpr int kExitGeneration = 2;    // stall / capacity / overflow
constexpr int kExitVerification = 3;  // suite failed the oracle

/// --model accepts either an inline spec ("3^4 t=2") or a path to a model
/// file. Files may hold several models, but this command needs exactly one.
fpcov::SystemModel load_single_model(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return fpcov::parse_model(arg);
  std::vector<fpcov::SystemModel> models = fpcov::parse_model_file(arg);
  if (models.size() != 1)
    throw fpcov::ConfigError("model file " + arg + " holds " +
                             std::to_string(models.size()) +
                             " models; generate needs exactly one");
  return models.front();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fpcov::ConfigError("cannot write " + path);
  out << content;
  if (!out) throw fpcov::ConfigError("write failed: " + path);
}

struct GenerateArgs {
  std::string model;
  std::string engine = "imfpa";
  fpcov::EngineConfig config;
  int runs = 1;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string out_stem;
  std::string format = "csv";
  std::string names_file;
  bool verify = false;
};

int cmd_generate(const GenerateArgs& args) {
  const fpcov::SystemModel model = load_single_model(args.model);
  const fpcov::EngineKind engine = fpcov::engine_from_string(args.engine);

  fpcov::BestOfRuns result = fpcov::best_of_runs(model, engine, args.config,
                                                 args.runs, args.seed,
                                                 args.jobs);

  if (args.verify) {
    const fpcov::VerifyVerdict verdict =
        fpcov::oracle_verify(model, result.best.suite.tests);
    if (!verdict.complete) {
      std::cerr << "verification FAILED: " << verdict.missing.size()
                << " interaction(s) uncovered\n";
      return kExitVerification;
    }
    std::cerr << "verification OK: suite of " << result.best.suite.size()
              << " test(s) covers every interaction\n";
  }

  std::string csv;
  if (args.names_file.empty()) {
    csv = fpcov::suite_to_csv(result.best.suite);
  } else {
    csv = fpcov::suite_to_csv(
        result.best.suite, fpcov::parse_names_file(args.names_file, model));
  }
  const std::string json =
      fpcov::report_to_json(result.best, &result.summary).dump(2) + "\n";

  if (args.out_stem.empty()) {
    std::cout << (args.format == "json" ? json : csv);
  } else {
    write_file(args.out_stem + ".csv", csv);
    write_file(args.out_stem + ".json", json);
    std::cerr << "wrote " << args.out_stem << ".csv and " << args.out_stem
              << ".json (best of " << args.runs << ": " <<
        result.best.suite.size() << " tests)\n";
  }
  return 0;
}

struct BenchArgs {
  std::vector<std::string> systems;
  bool all = false;
  std::string engine = "imfpa";
  fpcov::BenchOptions options;
  std::string out_file;
};

int cmd_bench(BenchArgs args) {
  if (args.all) {
    if (!args.systems.empty())
      throw fpcov::ConfigError("--all and --systems are mutually exclusive");
    args.options.systems = fpcov::all_table1_systems();
    std::cerr << "warning: --all includes systems that take hours at the "
                 "published population/generation budget\n";
  } else if (!args.systems.empty()) {
    args.options.systems = args.systems;
  }

  if (args.engine == "both") {
    args.options.run_fpa = true;
    args.options.run_imfpa = true;
  } else {
    const fpcov::EngineKind kind = fpcov::engine_from_string(args.engine);
    args.options.run_fpa = kind == fpcov::EngineKind::fpa;
    args.options.run_imfpa = kind == fpcov::EngineKind::imfpa;
  }

  args.options.on_progress = [](const std::string& line) {
    std::cerr << line << '\n';
  };

  const fpcov::BenchReport report = fpcov::run_bench(args.options);
  std::cout << fpcov::bench_table_text(report);
  if (!args.out_file.empty()) {
    write_file(args.out_file, fpcov::bench_to_json(report).dump(2) + "\n");
    std::cerr << "wrote " << args.out_file << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-way covering array generator (flower pollination search)"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate =
      app.add_subcommand("generate", "Generate one covering test suite");
  generate->add_option("--model", gen.model,
                       "Model spec like \"3^4 t=2\", or a model file path")
      ->required();
  generate->add_option("--engine", gen.engine, "Search engine")
      ->check(CLI::IsMember({"fpa", "imfpa"}))
      ->capture_default_str();
  generate->add_option("--pop", gen.config.population, "Population size")
      ->capture_default_str();
  generate->add_option("--gens", gen.config.max_generations,
                       "Generations per test case")
      ->capture_default_str();
  generate->add_option("--switch-p", gen.config.switch_p,
                       "FPA switch probability")
      ->capture_default_str();
  generate->add_option("--accept-scale", gen.config.accept_scale,
                       "Acceptance success scale S0 (<=0: population size)")
      ->capture_default_str();
  generate->add_option("--levy-beta", gen.config.levy.beta,
                       "Levy stability exponent")
      ->capture_default_str();
  generate->add_option("--levy-scale", gen.config.levy.scale,
                       "Levy step scale")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Base seed (run i uses seed+i)")
      ->capture_default_str();
  generate->add_option("--runs", gen.runs, "Independent runs; best kept")
      ->capture_default_str();
  generate->add_option("--jobs", gen.jobs, "Worker threads across runs")
      ->capture_default_str();
  generate->add_option("--stall-limit", gen.config.stall_limit,
                       "Consecutive zero-progress evolutions tolerated")
      ->capture_default_str();
  generate->add_option("--memory-budget", gen.config.tuple_memory_budget,
                       "Coverage tracker budget in bytes")
      ->capture_default_str();
  generate->add_flag("--persistent-success", gen.config.persistent_success,
                     "Carry acceptance success counters across test cases");
  generate->add_option("--out", gen.out_stem,
                       "Output stem; writes <stem>.csv and <stem>.json");
  generate->add_option("--format", gen.format,
                       "Stdout format when --out is absent")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  generate->add_option("--names", gen.names_file,
                       "Value-name file for CSV output");
  generate->add_flag("--verify", gen.verify,
                     "Re-check the suite with the brute-force oracle");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Compare engines against the published benchmark table");
  bench_cmd->add_option("--systems", bench.systems,
                        "Benchmark systems (default: S1 S10 S11)")
      ->delimiter(',');
  bench_cmd->add_flag("--all", bench.all, "All fourteen published systems");
  bench_cmd->add_option("--engine", bench.engine, "fpa, imfpa, or both")
      ->check(CLI::IsMember({"fpa", "imfpa", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--runs", bench.options.runs, "Runs per system")
      ->capture_default_str();
  bench_cmd->add_option("--pop", bench.options.config.population,
                        "Population size")
      ->capture_default_str();
  bench_cmd->add_option("--gens", bench.options.config.max_generations,
                        "Generations per test case")
      ->capture_default_str();
  bench_cmd->add_option("--switch-p", bench.options.config.switch_p,
                        "FPA switch probability")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.options.base_seed,
                        "Base seed (run i uses seed+i)")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.options.jobs,
                        "Worker threads across runs")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out_file, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every flag problem maps to the usage exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    return cmd_bench(bench);
  } catch (const fpcov::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fpcov::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fpcov::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGeneration;
  } catch (const fpcov::StallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGeneration;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGeneration;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitGeneration;
  }
}
