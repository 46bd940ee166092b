#include "canreg/report.hpp"

#include <atomic>
#include <thread>

#include "canreg/taylor.hpp"

namespace canreg {

nlohmann::json degree_to_json(const Multidegree& a) {
  return nlohmann::json(a.e);
}

nlohmann::json face_to_json(Subset face, int n) {
  // 1-based, matching the [n] convention
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if ((face >> j) & 1) out.push_back(j + 1);
  return nlohmann::json(out);
}

namespace {

nlohmann::json optional_to_json(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

nlohmann::json hilbert_to_json(const BoxModule& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const Multidegree& a : m.box().degrees()) {
    int d = m.dims(a);
    if (d == 0) continue;
    out.push_back({{"degree", degree_to_json(a)}, {"dim", d}});
  }
  return out;
}

nlohmann::json stanley_to_json(const StanleyDecomposition& s, int n) {
  // grouped as {face, degree, count}, preserving the filtration order
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < s.pairs.size();) {
    std::size_t j = i;
    while (j < s.pairs.size() && s.pairs[j].deg == s.pairs[i].deg &&
           s.pairs[j].face == s.pairs[i].face)
      ++j;
    out.push_back({{"face", face_to_json(s.pairs[i].face, n)},
                   {"degree", degree_to_json(s.pairs[i].deg)},
                   {"count", j - i}});
    i = j;
  }
  return out;
}

nlohmann::json betti_to_json(const BettiTable& b) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, mult] : b.entries)
    out.push_back({key.first, key.second.e, mult});
  return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g);
  return {{"n", ideal.n()}, {"generators", gens}};
}

std::string check_oracle(const MonomialIdeal& ideal, int i, const BoxModule& m) {
  for (const Multidegree& a : m.box().degrees()) {
    int expected = ext_hilbert_via_taylor(ideal, i, a, m.field());
    if (m.dims(a) != expected)
      return "disagreement at i=" + std::to_string(i) + " degree " +
             nlohmann::json(a.e).dump();
  }
  return "agree";
}

}  // namespace

nlohmann::json analyze_module(const MonomialIdeal& ideal, int i,
                              PrimeField field, bool oracle, bool& pass) {
  BoxModule m = build_ext_module(ideal, i, field);
  StanleyDecomposition s = build_stanley_decomposition(m);
  BettiTable b = koszul_betti(m);
  TheoremReport r = verify_theorem(m, s, b, i);
  pass = r.pass();

  nlohmann::json record = {
      {"i", i},
      {"box",
       {{"lower", m.box().lower.e}, {"upper", m.box().upper.e}}},
      {"hilbert", hilbert_to_json(m)},
      {"stanley", stanley_to_json(s, m.n())},
      {"reg_filtration_bound", optional_to_json(r.reg_filtration_bound)},
      {"betti", betti_to_json(b)},
      {"reg_exact", optional_to_json(r.reg_exact)},
      {"dim", optional_to_json(r.dim)},
      {"finite_length", r.finite_length},
      {"pass_theorem", r.pass_theorem},
      {"pass_corollary", r.pass_corollary},
      {"pass_chain", r.pass_chain},
      {"pass_finite_length", r.pass_finite_length},
      {"filtration", r.filtration_pass ? "pass" : "fail"},
  };
  if (oracle) {
    std::string status = check_oracle(ideal, i, m);
    record["oracle"] = status;
    if (status != "agree") pass = false;
  }
  return record;
}

nlohmann::json run_analyze(const MonomialIdeal& ideal,
                           const PipelineOptions& options, bool& all_pass) {
  PrimeField field(options.characteristic);
  std::vector<int> indices = options.indices;
  if (indices.empty())
    for (int i = 0; i <= ideal.n(); ++i) indices.push_back(i);
  for (int i : indices)
    if (i < 0 || i > ideal.n())
      throw input_error("index " + std::to_string(i) + " out of range");

  std::vector<nlohmann::json> records(indices.size());
  std::vector<char> passes(indices.size(), 0);
  auto work = [&](std::size_t k) {
    bool pass = false;
    records[k] = analyze_module(ideal, indices[k], field, options.oracle, pass);
    passes[k] = pass ? 1 : 0;
  };
  if (options.jobs > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int threads = std::min<int>(options.jobs, static_cast<int>(indices.size()));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < indices.size();) work(k);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t k = 0; k < indices.size(); ++k) work(k);
  }

  all_pass = true;
  nlohmann::json modules = nlohmann::json::array();
  for (std::size_t k = 0; k < indices.size(); ++k) {
    modules.push_back(records[k]);
    all_pass = all_pass && passes[k];
  }
  return {{"schema_version", kReportSchemaVersion},
          {"characteristic", options.characteristic},
          {"ideal", ideal_to_json(ideal)},
          {"modules", modules}};
}

SweepSummary run_sweep(const CorpusSpec& spec, const PipelineOptions& options) {
  PrimeField field(options.characteristic);
  std::vector<MonomialIdeal> ideals = enumerate_ideals(spec);

  struct Slot {
    long long modules = 0;
    long long equality = 0;
    std::vector<nlohmann::json> witnesses;
  };
  std::vector<Slot> slots(ideals.size());

  auto work = [&](std::size_t k) {
    const MonomialIdeal& ideal = ideals[k];
    for (int i = 0; i <= ideal.n(); ++i) {
      BoxModule m = build_ext_module(ideal, i, field);
      StanleyDecomposition s = build_stanley_decomposition(m);
      BettiTable b = koszul_betti(m);
      TheoremReport r = verify_theorem(m, s, b, i);
      bool oracle_ok = !options.oracle || check_oracle(ideal, i, m) == "agree";
      ++slots[k].modules;
      if (r.reg_exact && r.dim && *r.reg_exact == *r.dim) ++slots[k].equality;
      if (!r.pass() || !oracle_ok)
        slots[k].witnesses.push_back(
            {{"ideal", ideal_to_json(ideal)},
             {"i", i},
             {"reg_exact", optional_to_json(r.reg_exact)},
             {"reg_filtration_bound", optional_to_json(r.reg_filtration_bound)},
             {"dim", optional_to_json(r.dim)},
             {"filtration", r.filtration_pass ? "pass" : "fail"},
             {"oracle", oracle_ok ? "agree" : "disagree"}});
    }
  };

  if (options.jobs > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int threads = std::min<int>(options.jobs, static_cast<int>(ideals.size()));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < ideals.size();) work(k);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t k = 0; k < ideals.size(); ++k) work(k);
  }

  SweepSummary summary;
  summary.ideals = static_cast<long long>(ideals.size());
  for (const Slot& s : slots) {
    summary.modules_checked += s.modules;
    summary.equality_cases += s.equality;
    summary.failures += static_cast<long long>(s.witnesses.size());
    for (const auto& w : s.witnesses) summary.failing_witnesses.push_back(w);
  }
  summary.report = {
      {"schema_version", kReportSchemaVersion},
      {"characteristic", options.characteristic},
      {"corpus",
       {{"n", spec.n},
        {"max_exponent", spec.max_exponent},
        {"mode", spec.mode == CorpusMode::exhaustive ? "exhaustive" : "random"},
        {"sample_count", spec.sample_count},
        {"seed", spec.seed},
        {"squarefree_only", spec.squarefree_only}}},
      {"ideals", summary.ideals},
      {"modules_checked", summary.modules_checked},
      {"equality_cases", summary.equality_cases},
      {"failures", summary.failures},
      {"failing_witnesses", summary.failing_witnesses}};
  return summary;
}

}  // namespace canreg
