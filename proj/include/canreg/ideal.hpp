#ifndef CANREG_IDEAL_HPP
#define CANREG_IDEAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "canreg/multidegree.hpp"

namespace canreg {

using Exponents = std::vector<int>;  // point of N^n

bool divides(const Exponents& a, const Exponents& b);

/// Monomial ideal given by its antichain of minimal generators,
/// lex-sorted for reproducibility. The empty set is the zero ideal;
/// {0-vector} is the unit ideal (rejected by homological operations).
class MonomialIdeal {
public:
  /// Canonicalizes an arbitrary generating set: drops multiples,
  /// deduplicates, sorts lexicographically.
  static MonomialIdeal minimalize(int n, std::vector<Exponents> raw_gens);

  int n() const { return n_; }
  const std::vector<Exponents>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  /// True iff x^u ∈ I, i.e. some generator divides u.
  bool contains(const Exponents& u) const;

  /// Whether the summand (R/I)_{x_Λ} of the Čech complex is nonzero in
  /// multidegree a: supp(a⁻) ⊆ Λ and every generator has, off Λ, an
  /// exponent exceeding a.
  bool localized_nonzero(Subset lambda, const Multidegree& a) const;

  /// Componentwise max of the generator exponents (0 for unused
  /// variables). Rejects the unit ideal.
  Exponents rho() const;

private:
  MonomialIdeal(int n, std::vector<Exponents> gens)
      : n_(n), gens_(std::move(gens)) {}
  int n_ = 0;
  std::vector<Exponents> gens_;
};

/// Ideal text format: a header line `n = 3`, then one monomial per
/// line, either `[2,0,1]` or `x1^2*x3`; `#` starts a comment.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_file(const std::string& path);

std::string to_text(const MonomialIdeal& ideal);

}  // namespace canreg

#endif
