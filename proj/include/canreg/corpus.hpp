#ifndef CANREG_CORPUS_HPP
#define CANREG_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "canreg/ideal.hpp"

namespace canreg {

enum class CorpusMode { exhaustive, random };

struct CorpusSpec {
  int n = 2;
  int max_exponent = 1;
  CorpusMode mode = CorpusMode::exhaustive;
  int sample_count = 0;          // random mode
  std::uint64_t seed = 0;        // random mode
  bool squarefree_only = false;
  int max_generators = 8;        // random mode draw bound

  void validate() const;  // throws input_error on out-of-bounds specs
};

/// Streams the corpus in deterministic order. Exhaustive mode yields
/// every divisibility antichain of monomials in the exponent box
/// (including the zero ideal, never the unit ideal); random mode
/// yields seeded, deduplicated samples.
void enumerate_ideals(const CorpusSpec& spec,
                      const std::function<void(const MonomialIdeal&)>& yield);

std::vector<MonomialIdeal> enumerate_ideals(const CorpusSpec& spec);

/// Fixed interesting inputs: maximal ideals for n = 2, 3, principal
/// ideals, (x²), and the Stanley–Reisner ideal of the 6-vertex
/// triangulation of the real projective plane.
std::vector<MonomialIdeal> named_examples();

/// The projective-plane ideal alone (n = 6, ten squarefree cubics).
MonomialIdeal projective_plane_ideal();

}  // namespace canreg

#endif
