#include "canreg/cech.hpp"

#include <algorithm>

namespace canreg {

int DegreeComplex::summand_position(int i, Subset lambda) const {
  const auto& level = summands[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(level.begin(), level.end(), lambda);
  if (it == level.end() || *it != lambda) return -1;
  return static_cast<int>(it - level.begin());
}

DegreeComplex build_degree_complex(const MonomialIdeal& ideal,
                                   const Multidegree& a, Subset face,
                                   PrimeField field) {
  if (ideal.is_unit()) throw input_error("unit ideal not supported");
  const int n = ideal.n();
  std::vector<std::vector<Subset>> summands(static_cast<std::size_t>(n + 1));
  for (Subset lambda = 0; lambda < (Subset{1} << n); ++lambda) {
    if ((face & ~lambda) != 0) continue;
    if (!ideal.localized_nonzero(lambda, a)) continue;
    summands[static_cast<std::size_t>(popcount(lambda))].push_back(lambda);
  }
  // increasing bitmask order within each index
  std::vector<int> dims(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i)
    dims[static_cast<std::size_t>(i)] =
        static_cast<int>(summands[static_cast<std::size_t>(i)].size());

  std::vector<Matrix> diffs;
  for (int i = 0; i < n; ++i) {
    const auto& cols = summands[static_cast<std::size_t>(i)];
    const auto& rows = summands[static_cast<std::size_t>(i + 1)];
    Matrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()), field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Subset lambda = cols[c];
      for (int j = 0; j < n; ++j) {
        if ((lambda >> j) & 1) continue;
        Subset bigger = lambda | (Subset{1} << j);
        auto it = std::lower_bound(rows.begin(), rows.end(), bigger);
        if (it == rows.end() || *it != bigger) continue;
        int sign_count = popcount(lambda & ((Subset{1} << j) - 1));
        d.set_signed(static_cast<int>(it - rows.begin()), static_cast<int>(c),
                     (sign_count % 2) ? -1 : 1);
      }
    }
    diffs.push_back(std::move(d));
  }
  return DegreeComplex{n, a, face, std::move(summands),
                       FiniteComplex(std::move(dims), std::move(diffs))};
}

int local_cohomology_dim(const MonomialIdeal& ideal, int i,
                         const Multidegree& a, PrimeField field) {
  Subset face = a.negative_support();
  DegreeComplex slice = build_degree_complex(ideal, a, face, field);
  return slice.complex.cohomology_dims()[static_cast<std::size_t>(i)];
}

std::vector<Matrix> chain_multiplication_map(const DegreeComplex& src,
                                             const DegreeComplex& dst) {
  const int n = src.n;
  std::vector<Matrix> maps;
  for (int i = 0; i <= n; ++i) {
    const auto& cols = src.summands[static_cast<std::size_t>(i)];
    Matrix f(dst.complex.dim(i), static_cast<int>(cols.size()),
             src.complex.diff(0).field());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int r = dst.summand_position(i, cols[c]);
      if (r >= 0) f.set(r, static_cast<int>(c), 1);
    }
    maps.push_back(std::move(f));
  }
  return maps;
}

}  // namespace canreg
