#ifndef CANREG_LINALG_HPP
#define CANREG_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "canreg/multidegree.hpp"

namespace canreg {

/// The coefficient field GF(p). Construction checks primality.
struct PrimeField {
  std::uint32_t p;
  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t reduce(long long x) const {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// Dense matrix over GF(p), row-major.
class Matrix {
public:
  Matrix(int rows, int cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  static Matrix identity(int n, PrimeField field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint32_t at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  void set(int r, int c, std::uint32_t v) {
    a_[static_cast<std::size_t>(r) * cols_ + c] = v;
  }
  void set_signed(int r, int c, long long v) { set(r, c, field_.reduce(v)); }

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  bool is_zero() const;

  /// Appends the columns of rhs on the right.
  Matrix augmented(const Matrix& rhs) const;
  std::vector<std::uint32_t> column(int c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  int rows_, cols_;
  PrimeField field_;
  std::vector<std::uint32_t> a_;
};

/// Row echelon form in place; returns the pivot column indices.
/// Pivoting is first-nonzero in row-major order so every downstream
/// basis is reproducible.
std::vector<int> row_reduce(Matrix& m);

int rank(const Matrix& m);

/// Echelonized basis of the null space, returned as the columns of the
/// result (cols × nullity).
Matrix kernel_basis(const Matrix& m);

/// Coefficients c with span_cols · c = v, or nullopt if v is outside
/// the column span.
std::optional<std::vector<std::uint32_t>> solve_in_span(
    const Matrix& span_cols, const std::vector<std::uint32_t>& v);

/// One multidegree slice of a complex of graded modules: spaces at
/// indices 0..k and differentials d^i : spaces[i] → spaces[i+1].
/// d∘d = 0 is asserted at construction.
class FiniteComplex {
public:
  FiniteComplex(std::vector<int> dims, std::vector<Matrix> diffs);

  int length() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_[static_cast<std::size_t>(i)]; }
  const Matrix& diff(int i) const { return diffs_[static_cast<std::size_t>(i)]; }

  std::vector<int> cohomology_dims() const;

private:
  std::vector<int> dims_;
  std::vector<Matrix> diffs_;  // size dims_.size() - 1
};

/// Deterministic cocycle bases for every cohomology group of a
/// FiniteComplex: coboundary columns plus chosen representatives, with
/// coordinate extraction modulo coboundaries.
class CohomologyBasis {
public:
  CohomologyBasis(const FiniteComplex& c, PrimeField field);

  int h_dim(int i) const { return reps_[static_cast<std::size_t>(i)].cols(); }
  const Matrix& representatives(int i) const {
    return reps_[static_cast<std::size_t>(i)];
  }

  /// Coordinates of the class of the cocycle v in the representative
  /// basis at index i. Asserts v is a cocycle up to coboundaries.
  std::vector<std::uint32_t> coords(int i,
                                    const std::vector<std::uint32_t>& v) const;

private:
  std::vector<Matrix> boundaries_;  // independent coboundary columns
  std::vector<Matrix> reps_;        // cohomology representatives
};

/// Matrix of the induced map H^i(src) → H^i(dst) for a chain map given
/// as one matrix per index. Commutation with the differentials is
/// asserted.
Matrix induced_map_on_cohomology(const FiniteComplex& src,
                                 const CohomologyBasis& src_basis,
                                 const FiniteComplex& dst,
                                 const CohomologyBasis& dst_basis,
                                 const std::vector<Matrix>& chain_map, int i);

}  // namespace canreg

#endif
