#include "canreg/betti.hpp"

#include <algorithm>

namespace canreg {

namespace {

/// One degree slice of M ⊗ Koszul complex, as a homological complex
/// with d_t : term_t → term_{t-1}.
struct KoszulSlice {
  std::vector<int> term_dims;   // index t = 0..n
  std::vector<Matrix> d;        // d[t-1] : term_t → term_{t-1}
};

Multidegree subset_shift(const Multidegree& a, Subset s) {
  Multidegree out = a;
  for (int j = 0; j < a.n(); ++j)
    if ((s >> j) & 1) --out[j];
  return out;
}

KoszulSlice build_koszul_slice(const BoxModule& m, const Multidegree& a) {
  const int n = m.n();
  PrimeField f = m.field();
  // summands per homological index, increasing bitmask order
  std::vector<std::vector<Subset>> subsets(static_cast<std::size_t>(n + 1));
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    subsets[static_cast<std::size_t>(popcount(s))].push_back(s);

  std::vector<std::vector<int>> offsets(static_cast<std::size_t>(n + 1));
  std::vector<int> term_dims(static_cast<std::size_t>(n + 1), 0);
  for (int t = 0; t <= n; ++t) {
    int off = 0;
    for (Subset s : subsets[static_cast<std::size_t>(t)]) {
      offsets[static_cast<std::size_t>(t)].push_back(off);
      off += m.evaluate_at_degree(subset_shift(a, s));
    }
    term_dims[static_cast<std::size_t>(t)] = off;
  }

  std::vector<Matrix> d;
  for (int t = 1; t <= n; ++t) {
    const auto& cols_subs = subsets[static_cast<std::size_t>(t)];
    const auto& rows_subs = subsets[static_cast<std::size_t>(t - 1)];
    Matrix mat(term_dims[static_cast<std::size_t>(t - 1)],
               term_dims[static_cast<std::size_t>(t)], f);
    for (std::size_t ci = 0; ci < cols_subs.size(); ++ci) {
      Subset s = cols_subs[ci];
      Multidegree src_deg = subset_shift(a, s);
      int pos = 0;
      for (int j = 0; j < n; ++j) {
        if (!((s >> j) & 1)) continue;
        Subset smaller = s & ~(Subset{1} << j);
        auto it = std::lower_bound(rows_subs.begin(), rows_subs.end(), smaller);
        std::size_t ri = static_cast<std::size_t>(it - rows_subs.begin());
        Matrix mult = m.mult_at(src_deg, j);
        std::uint32_t sign = (pos % 2) ? f.neg(1) : 1;
        int row0 = offsets[static_cast<std::size_t>(t - 1)][ri];
        int col0 = offsets[static_cast<std::size_t>(t)][ci];
        for (int r = 0; r < mult.rows(); ++r)
          for (int c = 0; c < mult.cols(); ++c)
            mat.set(row0 + r, col0 + c, f.mul(sign, mult.at(r, c)));
        ++pos;
      }
    }
    d.push_back(std::move(mat));
  }
  for (int t = 2; t <= n; ++t)
    if (!(d[static_cast<std::size_t>(t - 2)] * d[static_cast<std::size_t>(t - 1)])
             .is_zero())
      throw invariant_error("Koszul d∘d != 0");
  return KoszulSlice{std::move(term_dims), std::move(d)};
}

}  // namespace

BettiTable koszul_betti(const BoxModule& m) {
  const int n = m.n();
  BettiTable table;
  // candidate degrees: support box shifted by the e_S range
  DegreeBox cand{m.box().lower, m.box().upper};
  for (int j = 0; j < n; ++j) ++cand.upper[j];
  for (const Multidegree& a : cand.degrees()) {
    KoszulSlice slice = build_koszul_slice(m, a);
    auto rk = [&](int t) {
      if (t < 1 || t > n) return 0;
      return rank(slice.d[static_cast<std::size_t>(t - 1)]);
    };
    for (int t = 0; t <= n; ++t) {
      int h = slice.term_dims[static_cast<std::size_t>(t)] - rk(t) - rk(t + 1);
      if (h != 0) table.entries[{t, a}] = h;
    }
  }
  return table;
}

std::optional<int> regularity(const BettiTable& b) {
  std::optional<int> best;
  for (const auto& [key, mult] : b.entries) {
    (void)mult;
    int v = key.second.totdeg() - key.first;
    if (!best || v > *best) best = v;
  }
  return best;
}

TheoremReport verify_theorem(const BoxModule& m, const StanleyDecomposition& s,
                             const BettiTable& b, int i) {
  TheoremReport r;
  r.i = i;
  r.reg_exact = regularity(b);
  r.reg_filtration_bound = filtration_reg_bound(s);
  r.dim = krull_dimension(s);
  r.finite_length = !m.is_zero_module() && m.is_finite_length();
  r.filtration_pass = verify_filtration(s, m).pass;
  if (r.reg_exact && r.dim) {
    r.pass_theorem = *r.reg_exact <= *r.dim;
    r.pass_corollary = *r.dim <= m.n() - i;
    r.pass_chain = r.reg_filtration_bound &&
                   *r.reg_exact <= *r.reg_filtration_bound &&
                   *r.reg_filtration_bound <= *r.dim;
  } else {
    // zero module: every statement is vacuous
    r.pass_theorem = r.pass_corollary = r.pass_chain =
        !r.reg_exact && !r.dim && !r.reg_filtration_bound;
  }
  if (r.finite_length && r.reg_exact) r.pass_finite_length = *r.reg_exact <= 0;
  return r;
}

TheoremReport verify_theorem(const MonomialIdeal& ideal, int i,
                             PrimeField field) {
  BoxModule m = build_ext_module(ideal, i, field);
  StanleyDecomposition s = build_stanley_decomposition(m);
  BettiTable b = koszul_betti(m);
  return verify_theorem(m, s, b, i);
}

}  // namespace canreg
