#ifndef CANREG_CECH_HPP
#define CANREG_CECH_HPP

#include <vector>

#include "canreg/ideal.hpp"
#include "canreg/linalg.hpp"
#include "canreg/multidegree.hpp"

namespace canreg {

/// The multidegree-a slice of the restricted Čech complex Č_F(R/I).
/// F = ∅ gives the full complex. Every surviving summand R_{x_Λ} is a
/// one-dimensional space with canonical basis x^a, so differentials
/// and chain maps are signed 0/1 matrices.
struct DegreeComplex {
  int n = 0;
  Multidegree a;
  Subset face = 0;  // restriction face F
  std::vector<std::vector<Subset>> summands;  // per index i, |Λ| = i, F ⊆ Λ
  FiniteComplex complex;

  int summand_position(int i, Subset lambda) const;  // -1 if absent
};

/// Builds the slice: summand Λ present iff F ⊆ Λ and the localization
/// (R/I)_{x_Λ} is nonzero at a; the differential entry Λ → Λ∪{j} is
/// (−1)^{#{l ∈ Λ : l < j}}. Summands are ordered by increasing bitmask.
DegreeComplex build_degree_complex(const MonomialIdeal& ideal,
                                   const Multidegree& a, Subset face,
                                   PrimeField field);

/// dim_k H^i_m(R/I)_a, computed on the restricted complex with
/// F = supp(a⁻).
int local_cohomology_dim(const MonomialIdeal& ideal, int i,
                         const Multidegree& a, PrimeField field);

/// Per cohomological index, the matrix of multiplication by x_j from
/// the slice at a to the slice at a + e_j (both restricted to F).
std::vector<Matrix> chain_multiplication_map(const DegreeComplex& src,
                                             const DegreeComplex& dst);

}  // namespace canreg

#endif
