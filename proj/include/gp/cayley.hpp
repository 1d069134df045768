#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gp/words.hpp"

namespace gp {

  struct CayleyLimits {
    int         max_radius   = 6;
    std::size_t max_elements = 2'000'000;
  };

  // X = ∪ X_v ordered by (vertex index, generator index).
  std::vector<Letter> generating_set(Presentation const& p);

  // Ball of radius R around the identity in the Cayley graph over X.
  struct CayleyBall {
    int                     radius = 0;
    std::vector<Letter>     letters;
    std::vector<NormalForm> elements;  // breadth-first order
    std::vector<int>        distance;
    // (parent index, letter index) for every edge realising distance - 1
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
                             predecessors;
    std::vector<std::size_t> sphere_sizes;

    std::optional<std::uint32_t> find(NormalForm const& g) const;
    std::size_t size() const noexcept {
      return elements.size();
    }

    std::unordered_map<NormalForm, std::uint32_t, NormalFormHash> index;
  };

  CayleyBall ball(Presentation const& p, int radius, CayleyLimits limits = {});

  // Word metric distance d(g, h) = |g⁻¹h|.
  std::int64_t distance(Presentation const& p,
                        NormalForm const&   g,
                        NormalForm const&   h);
  std::int64_t distance(Presentation const&       p,
                        std::span<const Syllable> e1,
                        std::span<const Syllable> e2);

  struct GeodesicList {
    std::vector<LetterWord> words;
    bool                    truncated = false;
  };

  // All geodesic words labelling paths from g to h (at most `cap`), in
  // lexicographic order of letter indices.
  GeodesicList geodesics_between(Presentation const& p,
                                 NormalForm const&   g,
                                 NormalForm const&   h,
                                 std::size_t         cap = 1024);

  // Synchronous fellow-travel distance of two paths from the identity; the
  // shorter path waits at its endpoint.
  std::int64_t fellow_travel_distance(Presentation const&     p,
                                      std::span<const Letter> w1,
                                      std::span<const Letter> w2);

  struct BigonWitness {
    char         kind = 'a';  // 'a': common endpoints; 'b': α1·x = α2
    NormalForm   endpoint;
    LetterWord   first;
    LetterWord   second;
    std::int64_t width = 0;
  };

  struct BigonRow {
    int          radius       = 0;
    std::int64_t case_a_width = 0;
    std::int64_t case_b_width = 0;
    std::size_t  case_a_pairs = 0;
    std::size_t  case_b_pairs = 0;
  };

  struct BigonReport {
    int                   radius       = 0;
    std::size_t           ball_size    = 0;
    std::int64_t          max_width    = 0;
    std::int64_t          case_a_width = 0;
    std::int64_t          case_b_width = 0;
    // max over near-bigons (α1, α2) of width − (widest case-a bigon ending
    // at α2's endpoint)
    std::int64_t          case_b_excess = 0;
    std::optional<BigonWitness> witness;
    std::vector<BigonRow> rows;
    bool                  truncated = false;  // some geodesic set was capped
    std::string           caveat;
  };

  struct BigonOptions {
    CayleyLimits limits;
    std::size_t  geodesic_cap = 4096;  // per endpoint
    unsigned     threads      = 1;
  };

  BigonReport bigon_scan(Presentation const& p,
                         int                 radius,
                         BigonOptions const& options = {});

  // Widest geodesic bigon in the Cayley graph of a single vertex group over
  // its own X_v (exhaustive for finite groups).
  std::int64_t measure_vertex_thinness(VertexGroup const& g);

}  // namespace gp
