#include "canreg/taylor.hpp"

#include <algorithm>

namespace canreg {

namespace {
constexpr int kMaxTaylorGenerators = 12;  // 2^g summands

Exponents subset_lcm(const std::vector<Exponents>& gens, std::uint32_t s, int n) {
  Exponents l(static_cast<std::size_t>(n), 0);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if ((s >> g) & 1)
      for (int j = 0; j < n; ++j)
        l[static_cast<std::size_t>(j)] =
            std::max(l[static_cast<std::size_t>(j)], gens[g][static_cast<std::size_t>(j)]);
  return l;
}

}  // namespace

FiniteComplex taylor_dual_slice(const MonomialIdeal& ideal,
                                const Multidegree& a, PrimeField field) {
  if (ideal.is_unit()) throw input_error("unit ideal not supported");
  const int n = ideal.n();
  const auto& gens = ideal.gens();
  const int g = static_cast<int>(gens.size());
  if (g > kMaxTaylorGenerators)
    throw input_error("Taylor oracle capped at " +
                      std::to_string(kMaxTaylorGenerators) + " generators");

  // summand for S nonzero at a iff a + lcm(S) - e_[n] >= 0
  auto present = [&](std::uint32_t s) {
    Exponents l = subset_lcm(gens, s, n);
    for (int j = 0; j < n; ++j)
      if (a[j] + l[static_cast<std::size_t>(j)] - 1 < 0) return false;
    return true;
  };

  std::vector<std::vector<std::uint32_t>> subsets(static_cast<std::size_t>(g + 1));
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g); ++s)
    if (present(s)) subsets[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);

  std::vector<int> dims(static_cast<std::size_t>(g + 1));
  for (int t = 0; t <= g; ++t)
    dims[static_cast<std::size_t>(t)] =
        static_cast<int>(subsets[static_cast<std::size_t>(t)].size());

  std::vector<Matrix> diffs;
  for (int t = 0; t < g; ++t) {
    const auto& cols = subsets[static_cast<std::size_t>(t)];
    const auto& rows = subsets[static_cast<std::size_t>(t + 1)];
    Matrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()), field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t s = rows[r];
      int pos = 0;
      for (int k = 0; k < g; ++k) {
        if (!((s >> k) & 1)) continue;
        std::uint32_t smaller = s & ~(std::uint32_t{1} << k);
        auto it = std::lower_bound(cols.begin(), cols.end(), smaller);
        if (it != cols.end() && *it == smaller)
          d.set_signed(static_cast<int>(r), static_cast<int>(it - cols.begin()),
                       (pos % 2) ? -1 : 1);
        ++pos;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FiniteComplex(std::move(dims), std::move(diffs));
}

int ext_hilbert_via_taylor(const MonomialIdeal& ideal, int i,
                           const Multidegree& a, PrimeField field) {
  if (i < 0 || i > ideal.n()) throw input_error("cohomological index out of range");
  FiniteComplex slice = taylor_dual_slice(ideal, a, field);
  if (i >= slice.length()) return 0;
  return slice.cohomology_dims()[static_cast<std::size_t>(i)];
}

}  // namespace canreg
