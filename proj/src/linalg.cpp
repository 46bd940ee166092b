#include "canreg/linalg.hpp"

#include <algorithm>

namespace canreg {

PrimeField::PrimeField(std::uint32_t modulus) : p(modulus) {
  if (p < 2) throw input_error("characteristic must be prime");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw input_error("characteristic must be prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw invariant_error("inverse of zero");
  // Fermat
  std::uint64_t base = a, result = 1;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Matrix Matrix::identity(int n, PrimeField field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw invariant_error("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      std::uint32_t v = at(r, k);
      if (!v) continue;
      for (int c = 0; c < rhs.cols_; ++c)
        out.set(r, c, field_.add(out.at(r, c), field_.mul(v, rhs.at(k, c))));
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix Matrix::augmented(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw invariant_error("augment shape mismatch");
  Matrix out(rows_, cols_ + rhs.cols_, field_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (int c = 0; c < rhs.cols_; ++c) out.set(r, cols_ + c, rhs.at(r, c));
  }
  return out;
}

std::vector<std::uint32_t> Matrix::column(int c) const {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
  return v;
}

std::vector<int> row_reduce(Matrix& m) {
  const PrimeField& f = m.field();
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int piv = -1;
    for (int r = pr; r < m.rows(); ++r)
      if (m.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != pr)
      for (int k = 0; k < m.cols(); ++k) {
        std::uint32_t t = m.at(pr, k);
        m.set(pr, k, m.at(piv, k));
        m.set(piv, k, t);
      }
    std::uint32_t inv = f.inv(m.at(pr, c));
    for (int k = 0; k < m.cols(); ++k) m.set(pr, k, f.mul(inv, m.at(pr, k)));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      std::uint32_t factor = m.at(r, c);
      if (!factor) continue;
      for (int k = 0; k < m.cols(); ++k)
        m.set(r, k, f.sub(m.at(r, k), f.mul(factor, m.at(pr, k))));
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

int rank(const Matrix& m) {
  Matrix copy = m;
  return static_cast<int>(row_reduce(copy).size());
}

Matrix kernel_basis(const Matrix& m) {
  Matrix reduced = m;
  std::vector<int> pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  int nullity = m.cols() - static_cast<int>(pivots.size());
  Matrix basis(m.cols(), nullity, m.field());
  int out = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    basis.set(c, out, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.set(pivots[r], out, m.field().neg(reduced.at(static_cast<int>(r), c)));
    ++out;
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve_in_span(
    const Matrix& span_cols, const std::vector<std::uint32_t>& v) {
  const PrimeField& f = span_cols.field();
  int m = span_cols.rows();
  int k = span_cols.cols();
  if (k == 0) {
    bool zero = std::all_of(v.begin(), v.end(),
                            [](std::uint32_t x) { return x == 0; });
    if (zero) return std::vector<std::uint32_t>{};
    return std::nullopt;
  }
  Matrix aug(m, k + 1, f);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < k; ++c) aug.set(r, c, span_cols.at(r, c));
    aug.set(r, k, v[static_cast<std::size_t>(r)]);
  }
  std::vector<int> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  std::vector<std::uint32_t> sol(static_cast<std::size_t>(k), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), k);
  return sol;
}

FiniteComplex::FiniteComplex(std::vector<int> dims, std::vector<Matrix> diffs)
    : dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (diffs_.size() + 1 != dims_.size())
    throw invariant_error("complex length mismatch");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].cols() != dims_[i] || diffs_[i].rows() != dims_[i + 1])
      throw invariant_error("differential shape mismatch");
    if (i + 1 < diffs_.size() && !(diffs_[i + 1] * diffs_[i]).is_zero())
      throw invariant_error("d∘d != 0");
  }
}

std::vector<int> FiniteComplex::cohomology_dims() const {
  auto rk = [&](int i) {
    if (i < 0 || i >= static_cast<int>(diffs_.size())) return 0;
    return rank(diffs_[static_cast<std::size_t>(i)]);
  };
  std::vector<int> h(dims_.size());
  for (int i = 0; i < length(); ++i)
    h[static_cast<std::size_t>(i)] = dim(i) - rk(i) - rk(i - 1);
  return h;
}

CohomologyBasis::CohomologyBasis(const FiniteComplex& c, PrimeField field) {
  for (int i = 0; i < c.length(); ++i) {
    int dim = c.dim(i);
    // candidate columns: coboundaries first, then kernel vectors
    Matrix kernel = (i + 1 < c.length())
                        ? kernel_basis(c.diff(i))
                        : Matrix::identity(dim, field);
    Matrix image(dim, 0, field);
    if (i > 0) image = c.diff(i - 1);
    Matrix pool = image.augmented(kernel);
    // greedy rank-increasing selection, in column order
    Matrix chosen(dim, 0, field);
    std::vector<int> kept;
    Matrix work(dim, 0, field);
    int cur_rank = 0;
    for (int col = 0; col < pool.cols(); ++col) {
      Matrix trial(dim, work.cols() + 1, field);
      for (int r = 0; r < dim; ++r) {
        for (int k = 0; k < work.cols(); ++k) trial.set(r, k, work.at(r, k));
        trial.set(r, work.cols(), pool.at(r, col));
      }
      if (rank(trial) > cur_rank) {
        work = trial;
        ++cur_rank;
        kept.push_back(col);
      }
    }
    int nb = 0;
    for (int col : kept)
      if (col < image.cols()) ++nb;
    Matrix bnd(dim, nb, field);
    Matrix reps(dim, static_cast<int>(kept.size()) - nb, field);
    int bi = 0, ri = 0;
    for (int col : kept) {
      if (col < image.cols()) {
        for (int r = 0; r < dim; ++r) bnd.set(r, bi, pool.at(r, col));
        ++bi;
      } else {
        for (int r = 0; r < dim; ++r) reps.set(r, ri, pool.at(r, col));
        ++ri;
      }
    }
    boundaries_.push_back(std::move(bnd));
    reps_.push_back(std::move(reps));
  }
}

std::vector<std::uint32_t> CohomologyBasis::coords(
    int i, const std::vector<std::uint32_t>& v) const {
  const Matrix& bnd = boundaries_[static_cast<std::size_t>(i)];
  const Matrix& reps = reps_[static_cast<std::size_t>(i)];
  auto sol = solve_in_span(bnd.augmented(reps), v);
  if (!sol)
    throw invariant_error("vector is not a cocycle modulo coboundaries");
  return std::vector<std::uint32_t>(sol->begin() + bnd.cols(), sol->end());
}

Matrix induced_map_on_cohomology(const FiniteComplex& src,
                                 const CohomologyBasis& src_basis,
                                 const FiniteComplex& dst,
                                 const CohomologyBasis& dst_basis,
                                 const std::vector<Matrix>& chain_map, int i) {
  if (static_cast<int>(chain_map.size()) != src.length())
    throw invariant_error("chain map length mismatch");
  for (int k = 0; k + 1 < src.length(); ++k) {
    Matrix lhs = dst.diff(k) * chain_map[static_cast<std::size_t>(k)];
    Matrix rhs = chain_map[static_cast<std::size_t>(k + 1)] * src.diff(k);
    if (!(lhs == rhs))
      throw invariant_error("chain map does not commute with differentials");
  }
  int hs = src_basis.h_dim(i);
  int hd = dst_basis.h_dim(i);
  Matrix out(hd, hs, chain_map.empty() ? PrimeField(2) : chain_map[0].field());
  const Matrix& reps = src_basis.representatives(i);
  const Matrix& f = chain_map[static_cast<std::size_t>(i)];
  for (int c = 0; c < hs; ++c) {
    std::vector<std::uint32_t> image(static_cast<std::size_t>(dst.dim(i)), 0);
    for (int r = 0; r < f.rows(); ++r) {
      std::uint32_t acc = 0;
      for (int k = 0; k < f.cols(); ++k)
        acc = f.field().add(acc, f.field().mul(f.at(r, k), reps.at(k, c)));
      image[static_cast<std::size_t>(r)] = acc;
    }
    std::vector<std::uint32_t> coords = dst_basis.coords(i, image);
    for (int r = 0; r < hd; ++r) out.set(r, c, coords[static_cast<std::size_t>(r)]);
  }
  return out;
}

}  // namespace canreg
