#include "canreg/stanley.hpp"

#include <algorithm>

namespace canreg {

namespace {

std::vector<int> face_indices(Subset face, int n) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if ((face >> j) & 1) out.push_back(j);
  return out;
}

/// deg lies in the Stanley space of the pair: equality off the face,
/// ≥ on it.
bool pair_covers(const StanleyPair& pr, const Multidegree& deg) {
  for (int j = 0; j < deg.n(); ++j) {
    bool on_face = (pr.face >> j) & 1;
    if (on_face ? deg[j] < pr.deg[j] : deg[j] != pr.deg[j]) return false;
  }
  return true;
}

/// The vector of u·m for the unique monomial u in k[face] reaching deg,
/// in the canonical basis of M_deg; nullopt when the product vanishes
/// or deg is outside the Stanley space.
std::optional<std::vector<std::uint32_t>> pair_vector_at(
    const BoxModule& m, const StanleyPair& pr, const Multidegree& deg) {
  if (!pair_covers(pr, deg)) return std::nullopt;
  Matrix c = m.composite_mult(pr.deg, deg);
  if (c.rows() == 0) return std::nullopt;
  std::vector<std::uint32_t> v = c.column(pr.basis_index);
  if (std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; }))
    return std::nullopt;
  return v;
}

Matrix span_of_earlier(const BoxModule& m, const StanleyDecomposition& s,
                       int upto, const Multidegree& deg) {
  std::vector<std::vector<std::uint32_t>> cols;
  for (int i = 0; i < upto; ++i)
    if (auto v = pair_vector_at(m, s.pairs[static_cast<std::size_t>(i)], deg))
      cols.push_back(std::move(*v));
  Matrix span(m.evaluate_at_degree(deg), static_cast<int>(cols.size()),
              m.field());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      span.set(static_cast<int>(r), static_cast<int>(c), cols[c][r]);
  return span;
}

}  // namespace

StanleyDecomposition build_stanley_decomposition(const BoxModule& m) {
  const int n = m.n();
  std::vector<StanleyPair> pairs;
  for (const Multidegree& b : m.box().degrees()) {
    // b must hit exactly its positive support: 1 on the face, ≤ 0 off
    Subset face = 0;
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 1) face |= Subset{1} << j;
      else if (b[j] > 0) { ok = false; break; }
    }
    if (!ok) continue;
    int d = m.dims(b);
    for (int t = 0; t < d; ++t) pairs.push_back(StanleyPair{b, face, t});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [n](const StanleyPair& x, const StanleyPair& y) {
                     int tx = x.deg.totdeg(), ty = y.deg.totdeg();
                     if (tx != ty) return tx > ty;
                     auto fx = face_indices(x.face, n), fy = face_indices(y.face, n);
                     if (fx != fy) return fx < fy;
                     if (x.deg != y.deg) return x.deg < y.deg;
                     return x.basis_index < y.basis_index;
                   });
  return StanleyDecomposition{std::move(pairs)};
}

FiltrationReport verify_filtration(const StanleyDecomposition& s,
                                   const BoxModule& m) {
  const int n = m.n();
  // condition (A) per pair, in filtration order
  for (std::size_t j = 0; j < s.pairs.size(); ++j) {
    const StanleyPair& pr = s.pairs[j];
    // the generator itself must be new
    Matrix earlier = span_of_earlier(m, s, static_cast<int>(j), pr.deg);
    std::vector<std::uint32_t> self(
        static_cast<std::size_t>(m.evaluate_at_degree(pr.deg)), 0);
    self[static_cast<std::size_t>(pr.basis_index)] = 1;
    if (solve_in_span(earlier, self))
      return FiltrationReport{false, "A", static_cast<int>(j), -1, pr.deg};
    for (int l = 0; l < n; ++l) {
      if ((pr.face >> l) & 1) continue;
      Matrix xl = m.mult_at(pr.deg, l);
      std::vector<std::uint32_t> v = xl.column(pr.basis_index);
      if (std::all_of(v.begin(), v.end(),
                      [](std::uint32_t x) { return x == 0; }))
        continue;
      Multidegree target = pr.deg.shifted(l, 1);
      Matrix span = span_of_earlier(m, s, static_cast<int>(j), target);
      if (!solve_in_span(span, v))
        return FiltrationReport{false, "A", static_cast<int>(j), l, target};
    }
  }
  // condition (B): at every box degree the emitted vectors form a basis
  for (const Multidegree& b : m.box().degrees()) {
    Matrix all = span_of_earlier(m, s, static_cast<int>(s.pairs.size()), b);
    int count = 0;
    for (const StanleyPair& pr : s.pairs)
      if (pair_covers(pr, b)) ++count;
    if (all.cols() != count || rank(all) != count || count != m.dims(b))
      return FiltrationReport{false, "B", -1, -1, b};
  }
  return FiltrationReport{};
}

std::optional<int> filtration_reg_bound(const StanleyDecomposition& s) {
  std::optional<int> best;
  for (const StanleyPair& pr : s.pairs) {
    int t = pr.deg.totdeg();
    if (!best || t > *best) best = t;
  }
  return best;
}

std::optional<int> krull_dimension(const StanleyDecomposition& s) {
  std::optional<int> best;
  for (const StanleyPair& pr : s.pairs) {
    int t = popcount(pr.face);
    if (!best || t > *best) best = t;
  }
  return best;
}

}  // namespace canreg
