#ifndef CANREG_BOX_MODULE_HPP
#define CANREG_BOX_MODULE_HPP

#include <map>
#include <vector>

#include "canreg/cech.hpp"
#include "canreg/ideal.hpp"
#include "canreg/linalg.hpp"

namespace canreg {

/// Componentwise degree range [lower, upper]; upper = (1,...,1) for
/// Ext boxes.
struct DegreeBox {
  Multidegree lower;
  Multidegree upper;

  int n() const { return lower.n(); }
  bool contains(const Multidegree& a) const;
  long long volume() const;

  /// All degrees of the box in lexicographic order.
  std::vector<Multidegree> degrees() const;
};

/// Initial determinedness box for Ext^i(R/I, ω_R):
/// lower_j = 1 − max(ρ_j, 1), upper_j = 1. The builder then certifies
/// the lower bound by checking that the module vanishes on the shell
/// just below, enlarging if necessary.
DegreeBox determined_box(const MonomialIdeal& ideal);

/// Ext^i(R/I, ω_R) materialized over a finite degree box: per-degree
/// dimensions plus per-variable multiplication matrices. The module is
/// (1,...,1)-determined, so clamping against the box recovers every
/// graded piece.
class BoxModule {
public:
  int n() const { return box_.n(); }
  const DegreeBox& box() const { return box_; }
  PrimeField field() const { return field_; }

  /// dim_k M_a for a inside the box.
  int dims(const Multidegree& a) const;

  /// dim_k M_b for arbitrary b, via clamping b down to min(b, 1).
  int evaluate_at_degree(const Multidegree& b) const;

  /// Matrix of x_j : M_b → M_{b+e_j} in the clamped canonical bases,
  /// for arbitrary b. Identity when b_j ≥ 1 (bijective range).
  Matrix mult_at(const Multidegree& b, int j) const;

  /// Composite multiplication M_src → M_dst for src ≤ dst
  /// componentwise; path-independent by commutativity.
  Matrix composite_mult(const Multidegree& src, const Multidegree& dst) const;

  bool is_zero_module() const;

  /// Finite length iff every degree with a⁺ ≠ 0 vanishes.
  bool is_finite_length() const;

private:
  friend BoxModule build_ext_module(const MonomialIdeal&, int, PrimeField);
  BoxModule(DegreeBox box, PrimeField field) : box_(std::move(box)), field_(field) {}

  std::size_t index_of(const Multidegree& a) const;

  DegreeBox box_;
  PrimeField field_;
  std::vector<int> dims_;                    // per box degree, lex order
  std::map<std::pair<Multidegree, int>, Matrix> mult_;  // (a, j), a_j ≤ 0
};

/// Builds Ext^i(R/I, ω_R) via graded local duality:
/// dim M_a = dim H^{n−i}_m(R/I)_{−a} and mult(a, j) is the transpose
/// of the induced map on restricted-Čech cohomology. Verifies during
/// construction that mult(a, j) is bijective for j ∈ supp(a⁺) and that
/// the module vanishes on the shell below the box.
BoxModule build_ext_module(const MonomialIdeal& ideal, int i, PrimeField field);

}  // namespace canreg

#endif
