#ifndef CANREG_BETTI_HPP
#define CANREG_BETTI_HPP

#include <map>
#include <optional>

#include "canreg/box_module.hpp"
#include "canreg/stanley.hpp"

namespace canreg {

/// Sparse multigraded Betti table: (homological index, degree) → β.
struct BettiTable {
  std::map<std::pair<int, Multidegree>, int> entries;
};

/// Betti numbers of a BoxModule via Koszul homology: for each
/// candidate degree a the complex with t-th term ⊕_{|S|=t} M_{a−e_S}
/// and standard Koszul signs; β_{t,a} = dim H_t.
BettiTable koszul_betti(const BoxModule& m);

/// Castelnuovo–Mumford regularity max{totdeg(a) − i : β_{i,a} ≠ 0};
/// nullopt for the zero module.
std::optional<int> regularity(const BettiTable& b);

/// Per-(ideal, i) verification record: the theorem reg ≤ dim, the
/// corollary dim ≤ n − i, the proof's chain through the filtration
/// bound, and the finite-length property.
struct TheoremReport {
  int i = 0;
  std::optional<int> reg_exact;
  std::optional<int> reg_filtration_bound;
  std::optional<int> dim;
  bool finite_length = false;
  bool filtration_pass = true;
  bool pass_theorem = true;   // reg ≤ dim
  bool pass_corollary = true; // dim ≤ n − i
  bool pass_chain = true;     // reg ≤ bound ≤ dim
  bool pass_finite_length = true;

  bool pass() const {
    return pass_theorem && pass_corollary && pass_chain &&
           pass_finite_length && filtration_pass;
  }
};

TheoremReport verify_theorem(const BoxModule& m, const StanleyDecomposition& s,
                             const BettiTable& b, int i);

/// Convenience: full pipeline for one (ideal, i).
TheoremReport verify_theorem(const MonomialIdeal& ideal, int i,
                             PrimeField field);

}  // namespace canreg

#endif
