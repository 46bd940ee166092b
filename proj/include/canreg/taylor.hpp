#ifndef CANREG_TAYLOR_HPP
#define CANREG_TAYLOR_HPP

#include "canreg/ideal.hpp"
#include "canreg/linalg.hpp"

namespace canreg {

/// Independent route to the Hilbert function of Ext^i(R/I, ω_R): the
/// degree-a slice of Hom(Taylor complex of I, ω_R). Summands are
/// g-subsets S with Hom(R(−lcm S), R(−e_[n])) = R(lcm S − e_[n]);
/// nonzero at a iff a + lcm(S) − e_[n] ≥ 0. Exponential in the number
/// of generators; capped at 12.
int ext_hilbert_via_taylor(const MonomialIdeal& ideal, int i,
                           const Multidegree& a, PrimeField field);

/// The degree-a slice of the dualized Taylor complex itself, for
/// d∘d = 0 property checks.
FiniteComplex taylor_dual_slice(const MonomialIdeal& ideal,
                                const Multidegree& a, PrimeField field);

}  // namespace canreg

#endif
