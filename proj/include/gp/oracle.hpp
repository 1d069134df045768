#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gp/words.hpp"

namespace gp {

  // Brute-force word-problem oracle that never calls normalize(): closes an
  // expression under shuffles and merges of adjacent same-vertex syllables
  // (the generalisation of free cancellation, power deletion and commutation
  // moves) and keeps the shortest members. Inputs are limited to
  // `bound` <= 8 syllables; larger inputs raise ResourceError.
  inline constexpr std::size_t oracle_max_bound = 8;

  // All minimal-length expressions reachable from e, sorted.
  std::vector<Expression> oracle_reduced_forms(Presentation const&       p,
                                               std::span<const Syllable> e,
                                               std::size_t               bound);

  bool oracle_equal(Presentation const&       p,
                    std::span<const Syllable> e1,
                    std::span<const Syllable> e2,
                    std::size_t               bound);

}  // namespace gp
