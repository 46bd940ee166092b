#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "canreg/report.hpp"

namespace {

using canreg::input_error;

void write_json(const nlohmann::json& doc, const std::string& path) {
  std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

std::vector<int> parse_indices(const std::string& spec) {
  if (spec.empty() || spec == "all") return {};
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw input_error("bad index list '" + spec + "'");
    }
  }
  return out;
}

void print_pretty(const nlohmann::json& report, std::ostream& os) {
  os << "characteristic " << report["characteristic"].get<int>() << "\n";
  os << "  i  reg  bound  dim  length  status\n";
  for (const auto& mod : report["modules"]) {
    auto field = [&](const char* key) {
      return mod[key].is_null() ? std::string("-")
                                : std::to_string(mod[key].get<int>());
    };
    bool pass = mod["pass_theorem"].get<bool>() &&
                mod["pass_corollary"].get<bool>() &&
                mod["pass_chain"].get<bool>() &&
                mod["pass_finite_length"].get<bool>() &&
                mod["filtration"] == "pass";
    os << "  " << mod["i"].get<int>() << "  " << field("reg_exact") << "    "
       << field("reg_filtration_bound") << "      " << field("dim") << "    "
       << (mod["finite_length"].get<bool>() ? "finite" : "-") << "  "
       << (pass ? "pass" : "FAIL") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multigraded Ext engine for monomial ideals: Hilbert "
               "functions, Stanley filtrations, Betti tables, and the "
               "regularity-vs-dimension check"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global flags after the subcommand name

  unsigned characteristic = 2;
  std::string index_spec = "all";
  bool oracle = false;
  int jobs = 1;
  std::string json_path;
  bool pretty = false;
  app.add_option("--char", characteristic, "field characteristic (prime)")
      ->capture_default_str();
  app.add_option("-i,--indices", index_spec,
                 "comma-separated cohomological indices, or 'all'");
  app.add_flag("--oracle", oracle, "cross-validate against the Taylor complex");
  app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report here ('-' = stdout)");
  app.add_flag("--pretty", pretty, "print a human summary table");

  auto* analyze = app.add_subcommand("analyze", "run the pipeline on one ideal");
  std::string ideal_path;
  analyze->add_option("file", ideal_path, "ideal file")->required();

  auto* sweep = app.add_subcommand("sweep", "verify the theorem over a corpus");
  canreg::CorpusSpec corpus;
  bool exhaustive = false, random_mode = false;
  std::string replay_path = "replay.json";
  sweep->add_option("--n", corpus.n, "variable count")->required();
  sweep->add_option("--max-exp", corpus.max_exponent, "max generator exponent");
  sweep->add_flag("--exhaustive", exhaustive, "every antichain in the box");
  sweep->add_flag("--random", random_mode, "seeded random antichains");
  sweep->add_option("--samples", corpus.sample_count, "random sample count");
  sweep->add_option("--seed", corpus.seed, "PRNG seed (recorded in the report)");
  sweep->add_flag("--squarefree", corpus.squarefree_only, "squarefree generators only");
  sweep->add_option("--max-gens", corpus.max_generators,
                    "random mode: monomials drawn per sample");
  sweep->add_option("--replay", replay_path, "failure witness file")
      ->capture_default_str();

  auto* examples = app.add_subcommand("examples", "print the named example ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    canreg::PipelineOptions options;
    options.characteristic = characteristic;
    options.indices = parse_indices(index_spec);
    options.oracle = oracle;
    options.jobs = jobs;

    if (examples->parsed()) {
      for (const auto& ideal : canreg::named_examples())
        std::cout << canreg::to_text(ideal) << "\n";
      return 0;
    }

    auto start = std::chrono::steady_clock::now();
    if (analyze->parsed()) {
      canreg::MonomialIdeal ideal = canreg::parse_ideal_file(ideal_path);
      if (ideal.is_unit()) throw input_error("unit ideal not supported");
      bool all_pass = false;
      nlohmann::json report = canreg::run_analyze(ideal, options, all_pass);
      if (!json_path.empty()) write_json(report, json_path);
      if (pretty) print_pretty(report, std::cout);
      if (json_path.empty() && !pretty) write_json(report, "-");
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cerr << "analyze: " << ms << " ms\n";
      if (!all_pass) {
        std::cerr << "verification FAILED; see the pass flags in the report\n";
        return 1;
      }
      return 0;
    }

    // sweep
    if (exhaustive == random_mode)
      throw input_error("sweep: pass exactly one of --exhaustive / --random");
    corpus.mode = exhaustive ? canreg::CorpusMode::exhaustive
                             : canreg::CorpusMode::random;
    canreg::SweepSummary summary = canreg::run_sweep(corpus, options);
    if (!json_path.empty()) write_json(summary.report, json_path);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "ideals: " << summary.ideals
              << "  modules: " << summary.modules_checked
              << "  reg==dim: " << summary.equality_cases
              << "  failures: " << summary.failures << "\n";
    std::cerr << "sweep: " << ms << " ms\n";
    if (summary.failures > 0) {
      write_json(nlohmann::json(summary.failing_witnesses), replay_path);
      std::cerr << "witnesses written to " << replay_path << "\n";
      return 1;
    }
    return 0;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const canreg::invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
}
