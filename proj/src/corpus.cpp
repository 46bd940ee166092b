#include "canreg/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace canreg {

void CorpusSpec::validate() const {
  if (n < 1) throw input_error("corpus: n must be positive");
  if (max_exponent < (squarefree_only ? 1 : 0))
    throw input_error("corpus: bad max exponent");
  if (mode == CorpusMode::exhaustive) {
    bool ok = (n <= 3 && max_exponent <= 2) || (squarefree_only && n <= 4);
    if (!ok)
      throw input_error(
          "corpus: exhaustive mode limited to n<=3 with max exponent <=2, "
          "or squarefree with n<=4");
  } else {
    if (sample_count < 1) throw input_error("corpus: sample count must be positive");
    if (max_generators < 1) throw input_error("corpus: max generators must be positive");
  }
}

namespace {

std::vector<Exponents> monomial_pool(const CorpusSpec& spec) {
  std::vector<Exponents> pool;
  const int cap = spec.squarefree_only ? 1 : spec.max_exponent;
  Exponents cur(static_cast<std::size_t>(spec.n), 0);
  for (;;) {
    int j = spec.n - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == cap) {
      cur[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
    pool.push_back(cur);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool comparable(const Exponents& a, const Exponents& b) {
  return divides(a, b) || divides(b, a);
}

void antichain_dfs(const std::vector<Exponents>& pool, std::size_t from,
                   std::vector<Exponents>& chosen, int n,
                   const std::function<void(const MonomialIdeal&)>& yield) {
  if (from == pool.size()) {
    yield(MonomialIdeal::minimalize(n, chosen));
    return;
  }
  antichain_dfs(pool, from + 1, chosen, n, yield);
  const Exponents& m = pool[from];
  for (const Exponents& c : chosen)
    if (comparable(m, c)) return;
  chosen.push_back(m);
  antichain_dfs(pool, from + 1, chosen, n, yield);
  chosen.pop_back();
}

}  // namespace

void enumerate_ideals(const CorpusSpec& spec,
                      const std::function<void(const MonomialIdeal&)>& yield) {
  spec.validate();
  if (spec.mode == CorpusMode::exhaustive) {
    std::vector<Exponents> pool = monomial_pool(spec);
    std::vector<Exponents> chosen;
    antichain_dfs(pool, 0, chosen, spec.n, yield);
    return;
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> gen_count(1, spec.max_generators);
  std::uniform_int_distribution<int> exponent(
      0, spec.squarefree_only ? 1 : spec.max_exponent);
  std::set<std::vector<Exponents>> seen;
  int emitted = 0;
  long long attempts = 0;
  while (emitted < spec.sample_count) {
    if (++attempts > 1000LL * spec.sample_count + 1000)
      throw input_error("corpus: random sampling failed to find enough distinct ideals");
    int g = gen_count(rng);
    std::vector<Exponents> raw;
    for (int k = 0; k < g; ++k) {
      Exponents mon(static_cast<std::size_t>(spec.n));
      bool nonzero = false;
      for (int j = 0; j < spec.n; ++j) {
        mon[static_cast<std::size_t>(j)] = exponent(rng);
        nonzero |= mon[static_cast<std::size_t>(j)] != 0;
      }
      if (nonzero) raw.push_back(std::move(mon));
    }
    MonomialIdeal ideal = MonomialIdeal::minimalize(spec.n, std::move(raw));
    if (!seen.insert(ideal.gens()).second) continue;
    yield(ideal);
    ++emitted;
  }
}

std::vector<MonomialIdeal> enumerate_ideals(const CorpusSpec& spec) {
  std::vector<MonomialIdeal> out;
  enumerate_ideals(spec, [&](const MonomialIdeal& i) { out.push_back(i); });
  return out;
}

MonomialIdeal projective_plane_ideal() {
  // facets of the 6-vertex triangulation (antipodal quotient of the
  // icosahedron); generators are the complementary triples
  static const int facets[10][3] = {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 6},
                                    {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6},
                                    {3, 4, 5}, {3, 5, 6}};
  std::vector<Exponents> gens;
  for (const auto& f : facets) {
    Exponents g(6, 1);
    for (int v : f) g[static_cast<std::size_t>(v - 1)] = 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::minimalize(6, std::move(gens));
}

std::vector<MonomialIdeal> named_examples() {
  std::vector<MonomialIdeal> out;
  out.push_back(MonomialIdeal::minimalize(2, {{1, 0}, {0, 1}}));      // m, n=2
  out.push_back(MonomialIdeal::minimalize(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  out.push_back(MonomialIdeal::minimalize(2, {{1, 0}}));              // principal
  out.push_back(MonomialIdeal::minimalize(2, {{1, 1}}));              // hypersurface
  out.push_back(MonomialIdeal::minimalize(1, {{2}}));                 // (x^2)
  out.push_back(projective_plane_ideal());
  return out;
}

}  // namespace canreg
