#ifndef CANREG_MULTIDEGREE_HPP
#define CANREG_MULTIDEGREE_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace canreg {

/// Input that violates a precondition (bad file, unit ideal where
/// rejected, non-prime characteristic, ...). Maps to exit code 2 in
/// the CLI.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A violated internal invariant (d∘d ≠ 0, non-commuting chain map,
/// failed bijectivity). Indicates a bug or a falsified lemma; never
/// recoverable.
class invariant_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Subsets of [n] as bitmasks, bit j = variable j (0-based).
using Subset = std::uint32_t;

inline int popcount(Subset s) { return __builtin_popcount(s); }

/// Element of Z^n grading the polynomial ring, deg x_j = e_j.
struct Multidegree {
  std::vector<int> e;

  Multidegree() = default;
  explicit Multidegree(std::vector<int> v) : e(std::move(v)) {}

  int n() const { return static_cast<int>(e.size()); }
  int operator[](int j) const { return e[static_cast<std::size_t>(j)]; }
  int& operator[](int j) { return e[static_cast<std::size_t>(j)]; }

  int totdeg() const { return std::accumulate(e.begin(), e.end(), 0); }

  /// a⁺: componentwise max(a_j, 0).
  Multidegree plus_part() const {
    Multidegree r(*this);
    for (int& x : r.e) x = x > 0 ? x : 0;
    return r;
  }

  /// a⁻: componentwise max(−a_j, 0), so a = a⁺ − a⁻.
  Multidegree minus_part() const {
    Multidegree r(*this);
    for (int& x : r.e) x = x < 0 ? -x : 0;
    return r;
  }

  Subset support() const {
    Subset s = 0;
    for (int j = 0; j < n(); ++j)
      if (e[static_cast<std::size_t>(j)] != 0) s |= Subset{1} << j;
    return s;
  }

  Subset positive_support() const { return plus_part().support(); }
  Subset negative_support() const { return minus_part().support(); }

  Multidegree negated() const {
    Multidegree r(*this);
    for (int& x : r.e) x = -x;
    return r;
  }

  Multidegree shifted(int j, int delta) const {
    Multidegree r(*this);
    r[j] += delta;
    return r;
  }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree& a, const Multidegree& b) {
    return a.e <=> b.e;
  }
};

inline bool componentwise_leq(const Multidegree& a, const Multidegree& b) {
  for (int j = 0; j < a.n(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

}  // namespace canreg

#endif
