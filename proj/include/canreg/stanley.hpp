#ifndef CANREG_STANLEY_HPP
#define CANREG_STANLEY_HPP

#include <optional>
#include <string>
#include <vector>

#include "canreg/box_module.hpp"

namespace canreg {

/// One Stanley space k[G]·m: the generator sits at degree deg with
/// deg⁺ = e_face squarefree and face = supp(deg⁺); basis_index picks
/// the generator inside the slice basis at that degree.
struct StanleyPair {
  Multidegree deg;
  Subset face = 0;
  int basis_index = 0;

  friend bool operator==(const StanleyPair&, const StanleyPair&) = default;
};

/// Ordered Stanley decomposition: non-increasing total degree, ties
/// broken lexicographically by (face, degree, basis index).
struct StanleyDecomposition {
  std::vector<StanleyPair> pairs;
};

StanleyDecomposition build_stanley_decomposition(const BoxModule& m);

struct FiltrationReport {
  bool pass = true;
  std::string condition;   // "A" or "B" on failure
  int pair_index = -1;     // first violating j (0-based)
  int variable = -1;       // violating l (0-based), condition A only
  Multidegree degree;      // witness degree
};

/// Checks the filtration conditions: (A) for every l ∉ G_j, x_l·m_j
/// lies in the span of the earlier Stanley spaces, and m_j itself does
/// not; (B) at every box degree the emitted Stanley-space vectors are
/// independent and count dim M_b.
FiltrationReport verify_filtration(const StanleyDecomposition& s,
                                   const BoxModule& m);

/// max totdeg(deg m) over the pairs; nullopt for the zero module.
std::optional<int> filtration_reg_bound(const StanleyDecomposition& s);

/// max |face| over the pairs; nullopt for the zero module.
std::optional<int> krull_dimension(const StanleyDecomposition& s);

}  // namespace canreg

#endif
