#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gp {

  // The square complex spanned by the unit cube {0,1}^n restricted to the
  // commutator cells of the n-cycle: vertices are subsets S of the cycle's
  // vertices (bit masks), edges join S to S ∪ {v}, and squares (S, u, v)
  // exist for cycle-adjacent u, v outside S.
  struct CubeSurfaceComplex {
    struct Edge {
      std::uint32_t base;  // S, with bit v clear
      std::uint8_t  v;
    };
    struct Square {
      std::uint32_t base;  // S, with bits u and v clear
      std::uint8_t  u;
      std::uint8_t  v;     // u < v, cycle-adjacent
    };

    int                 n = 0;
    std::uint64_t       vertex_count = 0;
    std::vector<Edge>   edges;
    std::vector<Square> squares;
  };

  inline constexpr int max_surface_n = 20;

  // Throws InputError unless 3 <= n <= 20.
  CubeSurfaceComplex build_Y(int n);

  // The same complex read off the Cayley graph of ∏ Z/k_v: vertices reached
  // from 0 by words in distinct positive generators, and every commutator
  // square (for cycle-adjacent generators) whose four edges are among
  // those. Used to cross-check build_Y for arbitrary orders k_v >= 2.
  CubeSurfaceComplex build_Y_from_cayley(std::vector<std::int64_t> const& orders);

  std::int64_t euler_characteristic(CubeSurfaceComplex const& c);

  struct SurfaceCheck {
    bool closed_surface = true;
    // edges not lying in exactly two squares
    std::vector<CubeSurfaceComplex::Edge> bad_edges;
    // vertices whose link is not a single cycle
    std::vector<std::uint32_t> bad_vertices;
  };

  SurfaceCheck verify_closed_surface(CubeSurfaceComplex const& c);

  // "pass" when square orientations can be chosen consistently along
  // every shared edge, otherwise "undetermined".
  std::string orientability(CubeSurfaceComplex const& c);

  // 1 − χ/2; throws PreconditionViolation when the complex is not a closed
  // surface.
  std::int64_t genus_from_complex(CubeSurfaceComplex const& c);

}  // namespace gp
