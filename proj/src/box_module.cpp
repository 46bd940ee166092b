#include "canreg/box_module.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace canreg {

bool DegreeBox::contains(const Multidegree& a) const {
  for (int j = 0; j < n(); ++j)
    if (a[j] < lower[j] || a[j] > upper[j]) return false;
  return true;
}

long long DegreeBox::volume() const {
  long long v = 1;
  for (int j = 0; j < n(); ++j) v *= upper[j] - lower[j] + 1;
  return v;
}

std::vector<Multidegree> DegreeBox::degrees() const {
  std::vector<Multidegree> out;
  Multidegree cur = lower;
  for (;;) {
    out.push_back(cur);
    int j = n() - 1;
    while (j >= 0 && cur[j] == upper[j]) { cur[j] = lower[j]; --j; }
    if (j < 0) break;
    ++cur[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegreeBox determined_box(const MonomialIdeal& ideal) {
  Exponents r = ideal.rho();
  const int n = ideal.n();
  Multidegree lower(std::vector<int>(static_cast<std::size_t>(n)));
  Multidegree upper(std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int j = 0; j < n; ++j)
    lower[j] = 1 - std::max(r[static_cast<std::size_t>(j)], 1);
  return DegreeBox{std::move(lower), std::move(upper)};
}

std::size_t BoxModule::index_of(const Multidegree& a) const {
  std::size_t idx = 0;
  for (int j = 0; j < n(); ++j) {
    idx *= static_cast<std::size_t>(box_.upper[j] - box_.lower[j] + 1);
    idx += static_cast<std::size_t>(a[j] - box_.lower[j]);
  }
  return idx;
}

int BoxModule::dims(const Multidegree& a) const {
  if (!box_.contains(a)) throw invariant_error("degree outside box");
  return dims_[index_of(a)];
}

int BoxModule::evaluate_at_degree(const Multidegree& b) const {
  Multidegree clamped = b;
  for (int j = 0; j < n(); ++j) {
    clamped[j] = std::min(clamped[j], 1);
    if (clamped[j] < box_.lower[j]) return 0;  // below validated support
  }
  return dims_[index_of(clamped)];
}

Matrix BoxModule::mult_at(const Multidegree& b, int j) const {
  if (b[j] >= 1) {
    // x_j is bijective here; in the clamped bases the map is the identity
    return Matrix::identity(evaluate_at_degree(b), field_);
  }
  Multidegree clamped = b;
  bool below = false;
  for (int k = 0; k < n(); ++k) {
    clamped[k] = std::min(clamped[k], 1);
    if (clamped[k] < box_.lower[k]) below = true;
  }
  if (below) return Matrix(evaluate_at_degree(b.shifted(j, 1)), 0, field_);
  auto it = mult_.find({clamped, j});
  if (it == mult_.end()) throw invariant_error("multiplication map missing");
  return it->second;
}

Matrix BoxModule::composite_mult(const Multidegree& src,
                                 const Multidegree& dst) const {
  Matrix cur = Matrix::identity(evaluate_at_degree(src), field_);
  Multidegree b = src;
  for (int j = 0; j < n(); ++j)
    while (b[j] < dst[j]) {
      cur = mult_at(b, j) * cur;
      ++b[j];
    }
  return cur;
}

bool BoxModule::is_zero_module() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 0; });
}

bool BoxModule::is_finite_length() const {
  for (const Multidegree& a : box_.degrees())
    if (a.positive_support() != 0 && dims(a) > 0) return false;
  return true;
}

namespace {

// Slices and cohomology bases are reused heavily while building one
// module; cache per (degree, face).
struct SliceCache {
  const MonomialIdeal& ideal;
  PrimeField field;
  std::map<std::pair<Multidegree, Subset>,
           std::pair<DegreeComplex, CohomologyBasis>> cache;

  const std::pair<DegreeComplex, CohomologyBasis>& get(const Multidegree& a,
                                                       Subset face) {
    auto key = std::make_pair(a, face);
    auto it = cache.find(key);
    if (it == cache.end()) {
      DegreeComplex slice = build_degree_complex(ideal, a, face, field);
      CohomologyBasis basis(slice.complex, field);
      it = cache.emplace(key, std::make_pair(std::move(slice), std::move(basis)))
               .first;
    }
    return it->second;
  }
};

// Transpose of the induced map on H^{n-i} for x_j between the Čech
// slices at −a−e_j and −a: the multiplication M_a → M_{a+e_j}.
Matrix dual_mult_map(SliceCache& slices, int n, int i, const Multidegree& a,
                     int j) {
  Multidegree src_deg = a.shifted(j, 1).negated();
  Multidegree dst_deg = a.negated();
  Subset face = src_deg.negative_support() & dst_deg.negative_support();
  const auto& [src, src_basis] = slices.get(src_deg, face);
  const auto& [dst, dst_basis] = slices.get(dst_deg, face);
  std::vector<Matrix> chain = chain_multiplication_map(src, dst);
  Matrix induced = induced_map_on_cohomology(src.complex, src_basis,
                                             dst.complex, dst_basis, chain,
                                             n - i);
  return induced.transposed();
}

}  // namespace

BoxModule build_ext_module(const MonomialIdeal& ideal, int i, PrimeField field) {
  if (ideal.is_unit()) throw input_error("unit ideal not supported");
  const int n = ideal.n();
  if (i < 0 || i > n) throw input_error("cohomological index out of range");

  DegreeBox box = determined_box(ideal);
  SliceCache slices{ideal, field, {}};

  auto slice_dim = [&](const Multidegree& a) {
    Multidegree cech_deg = a.negated();
    const auto& [slice, basis] = slices.get(cech_deg, cech_deg.negative_support());
    (void)slice;
    return basis.h_dim(n - i);
  };

  // Certify the lower bound: the shell one step below the box must be
  // zero; otherwise enlarge and retry.
  for (int attempt = 0;; ++attempt) {
    if (attempt > 64) throw invariant_error("box validation did not stabilize");
    DegreeBox shell_box{box.lower, box.upper};
    for (int j = 0; j < n; ++j) shell_box.lower[j] -= 1;
    bool grew = false;
    for (const Multidegree& a : shell_box.degrees()) {
      if (box.contains(a)) continue;
      if (slice_dim(a) != 0) {
        for (int j = 0; j < n; ++j)
          if (a[j] < box.lower[j]) box.lower[j] = a[j];
        grew = true;
      }
    }
    if (!grew) break;
  }

  BoxModule m(box, field);
  std::vector<Multidegree> degrees = box.degrees();
  m.dims_.assign(static_cast<std::size_t>(box.volume()), 0);
  for (const Multidegree& a : degrees)
    m.dims_[m.index_of(a)] = slice_dim(a);

  for (const Multidegree& a : degrees) {
    for (int j = 0; j < n; ++j) {
      if (a[j] >= 1) {
        // boundary of the box: the Lemma asserts bijectivity; verify it
        Matrix map = dual_mult_map(slices, n, i, a, j);
        if (map.rows() != map.cols() || rank(map) != map.rows())
          throw invariant_error(
              "multiplication map is not bijective on supp(a+)");
        continue;
      }
      m.mult_.emplace(std::make_pair(a, j), dual_mult_map(slices, n, i, a, j));
    }
  }

  // commutativity of all composable squares inside the box
  for (const Multidegree& a : degrees)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (a[j] >= 1 || a[k] >= 1) continue;
        Matrix left = m.mult_at(a.shifted(k, 1), j) * m.mult_at(a, k);
        Matrix right = m.mult_at(a.shifted(j, 1), k) * m.mult_at(a, j);
        if (!(left == right))
          throw invariant_error("multiplication square does not commute");
      }

  return m;
}

}  // namespace canreg
