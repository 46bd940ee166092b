#include <doctest.h>

#include <algorithm>

#include "canreg/stanley.hpp"

using namespace canreg;

namespace {
const PrimeField kF101(101);

MonomialIdeal ideal(int n, std::vector<Exponents> gens) {
  return MonomialIdeal::minimalize(n, std::move(gens));
}

bool pair_covers(const StanleyPair& pr, const Multidegree& deg) {
  for (int j = 0; j < deg.n(); ++j) {
    bool on_face = (pr.face >> j) & 1;
    if (on_face ? deg[j] < pr.deg[j] : deg[j] != pr.deg[j]) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("decomposition of Ext^1 of (x^2)") {
  auto m = build_ext_module(ideal(1, {{2}}), 1, kF101);
  auto s = build_stanley_decomposition(m);
  REQUIRE(s.pairs.size() == 2);
  CHECK(s.pairs[0].deg.e == std::vector<int>{0});
  CHECK(s.pairs[0].face == 0);
  CHECK(s.pairs[1].deg.e == std::vector<int>{-1});
  CHECK(s.pairs[1].face == 0);
  CHECK(filtration_reg_bound(s) == 0);
  CHECK(krull_dimension(s) == 0);
}

TEST_CASE("decomposition of Ext^2 of the maximal ideal") {
  auto m = build_ext_module(ideal(2, {{1, 0}, {0, 1}}), 2, kF101);
  auto s = build_stanley_decomposition(m);
  REQUIRE(s.pairs.size() == 1);
  CHECK(s.pairs[0].deg.e == std::vector<int>{0, 0});
  CHECK(s.pairs[0].face == 0);
  CHECK(verify_filtration(s, m).pass);
}

TEST_CASE("decomposition of Ext^1 of (x1): one Stanley space k[x2]m") {
  auto m = build_ext_module(ideal(2, {{1, 0}}), 1, kF101);
  auto s = build_stanley_decomposition(m);
  REQUIRE(s.pairs.size() == 1);
  CHECK(s.pairs[0].deg.e == std::vector<int>{0, 1});
  CHECK(s.pairs[0].face == 0b10);
  CHECK(filtration_reg_bound(s) == 1);
  CHECK(krull_dimension(s) == 1);
}

TEST_CASE("hypersurface canonical module has dimension 1") {
  auto m = build_ext_module(ideal(2, {{1, 1}}), 1, kF101);
  auto s = build_stanley_decomposition(m);
  CHECK(krull_dimension(s) == 1);
}

TEST_CASE("zero module gives the empty decomposition and sentinels") {
  auto m = build_ext_module(ideal(2, {{1, 0}, {0, 1}}), 0, kF101);
  auto s = build_stanley_decomposition(m);
  CHECK(s.pairs.empty());
  CHECK_FALSE(filtration_reg_bound(s));
  CHECK_FALSE(krull_dimension(s));
  CHECK(verify_filtration(s, m).pass);
}

TEST_CASE("every pair has squarefree positive part matching its face") {
  for (auto& [n, gens] :
       std::vector<std::pair<int, std::vector<Exponents>>>{
           {2, {{2, 1}, {0, 3}}}, {3, {{1, 1, 0}, {0, 1, 1}}}, {2, {{2, 2}}}}) {
    auto i = ideal(n, gens);
    for (int idx = 0; idx <= n; ++idx) {
      auto m = build_ext_module(i, idx, kF101);
      auto s = build_stanley_decomposition(m);
      for (const auto& pr : s.pairs) {
        CHECK(pr.deg.positive_support() == pr.face);
        for (int j = 0; j < n; ++j) CHECK(pr.deg[j] <= 1);
      }
      // ordering: non-increasing total degree
      for (std::size_t k = 1; k < s.pairs.size(); ++k)
        CHECK(s.pairs[k - 1].deg.totdeg() >= s.pairs[k].deg.totdeg());
    }
  }
}

TEST_CASE("counting identity on an extended box") {
  for (auto& [n, gens] :
       std::vector<std::pair<int, std::vector<Exponents>>>{
           {1, {{2}}}, {2, {{1, 0}}}, {2, {{1, 1}}}, {2, {{2, 1}, {0, 3}}}}) {
    auto i = ideal(n, gens);
    for (int idx = 0; idx <= n; ++idx) {
      auto m = build_ext_module(i, idx, kF101);
      auto s = build_stanley_decomposition(m);
      DegreeBox ext{m.box().lower, m.box().upper};
      for (int j = 0; j < n; ++j) ext.upper[j] += 2;
      for (const Multidegree& b : ext.degrees()) {
        int count = 0;
        for (const auto& pr : s.pairs)
          if (pair_covers(pr, b)) ++count;
        CHECK(count == m.evaluate_at_degree(b));
      }
    }
  }
}

TEST_CASE("filtration verification passes on constructed decompositions") {
  for (auto& [n, gens] :
       std::vector<std::pair<int, std::vector<Exponents>>>{
           {1, {{2}}}, {2, {{1, 0}}}, {2, {{2, 1}, {0, 3}}},
           {3, {{1, 1, 0}, {0, 1, 1}}}}) {
    auto i = ideal(n, gens);
    for (int idx = 0; idx <= n; ++idx) {
      auto m = build_ext_module(i, idx, kF101);
      auto report = verify_filtration(build_stanley_decomposition(m), m);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("misordered decomposition fails condition (A)") {
  auto m = build_ext_module(ideal(1, {{2}}), 1, kF101);
  auto s = build_stanley_decomposition(m);
  std::reverse(s.pairs.begin(), s.pairs.end());  // increasing total degree
  auto report = verify_filtration(s, m);
  CHECK_FALSE(report.pass);
  CHECK(report.condition == "A");
  CHECK(report.pair_index == 0);
  CHECK(report.variable == 0);
}

TEST_CASE("filtration bound never exceeds the Krull dimension") {
  for (auto& [n, gens] :
       std::vector<std::pair<int, std::vector<Exponents>>>{
           {2, {{1, 0}}}, {2, {{2, 2}}}, {3, {{2, 0, 0}, {0, 1, 1}}}}) {
    auto i = ideal(n, gens);
    for (int idx = 0; idx <= n; ++idx) {
      auto s = build_stanley_decomposition(build_ext_module(i, idx, kF101));
      auto bound = filtration_reg_bound(s);
      auto dim = krull_dimension(s);
      CHECK(bound.has_value() == dim.has_value());
      if (bound) CHECK(*bound <= *dim);
    }
  }
}
