#ifndef CANREG_REPORT_HPP
#define CANREG_REPORT_HPP

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "canreg/betti.hpp"
#include "canreg/corpus.hpp"
#include "canreg/ideal.hpp"

namespace canreg {

inline constexpr int kReportSchemaVersion = 1;

struct PipelineOptions {
  std::uint32_t characteristic = 2;
  std::vector<int> indices;  // empty = all 0..n
  bool oracle = false;
  int jobs = 1;
};

/// Full pipeline for one cohomological index. Throws invariant_error
/// on falsified lemmas; inequality failures are reported, not thrown.
nlohmann::json analyze_module(const MonomialIdeal& ideal, int i,
                              PrimeField field, bool oracle, bool& pass);

/// The `analyze` report: one record per requested index plus the input
/// echo. Sets all_pass to the conjunction of the per-index pass flags.
nlohmann::json run_analyze(const MonomialIdeal& ideal,
                           const PipelineOptions& options, bool& all_pass);

struct SweepSummary {
  long long ideals = 0;
  long long modules_checked = 0;
  long long equality_cases = 0;  // reg == dim
  long long failures = 0;
  nlohmann::json report;         // deterministic JSON document
  std::vector<nlohmann::json> failing_witnesses;
};

/// Runs verify_theorem over the whole corpus × all indices; the
/// empirical harness for the main inequality.
SweepSummary run_sweep(const CorpusSpec& spec, const PipelineOptions& options);

nlohmann::json degree_to_json(const Multidegree& a);
nlohmann::json face_to_json(Subset face, int n);  // sorted 1-based indices

}  // namespace canreg

#endif
