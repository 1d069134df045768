#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gp/words.hpp"

namespace gp {

  // Verdict on hyperbolicity of a graph product over a finite graph, one
  // flag per condition:
  //   (i)   every vertex group is hyperbolic;
  //   (ii)  no two vertices with infinite groups are adjacent;
  //   (iii) the link of each vertex with an infinite group is a clique;
  //   (iv)  no induced 4-cycle.
  struct HyperbolicityReport {
    bool verdict  = true;
    bool cond_i   = true;
    bool cond_ii  = true;
    bool cond_iii = true;
    bool cond_iv  = true;

    std::optional<VertexId>                       non_hyperbolic_vertex;
    std::optional<std::pair<VertexId, VertexId>>  adjacent_infinite_pair;
    struct NonCliqueLink {
      VertexId                     vertex;
      std::pair<VertexId, VertexId> pair;
    };
    std::optional<NonCliqueLink>         non_clique_link;
    std::optional<std::vector<VertexId>> induced_square;
  };

  HyperbolicityReport decide_hyperbolic(Presentation const& p);

  // Freeness of the kernel of G → ∏ G_v.
  struct KernelReport {
    bool                                 free = true;
    std::optional<std::vector<VertexId>> witness;
    std::optional<std::int64_t>          genus_if_cycle;
  };

  KernelReport decide_kernel_free(Presentation const& p);

  // Image of e under G → ∏ G_v, one entry per vertex.
  std::vector<Elem> project_to_direct_product(Presentation const&       p,
                                              std::span<const Syllable> e);

  bool in_kernel(Presentation const& p, std::span<const Syllable> e);

  struct SurfaceCharacteristics {
    std::int64_t euler = 0;
    std::int64_t genus = 0;
  };

  // χ = (4 − n)·2^(n−2) and genus 1 + (n − 4)·2^(n−3) of the surface found
  // in the kernel for Γ = C_n, n >= 3.
  SurfaceCharacteristics surface_characteristics(std::int64_t n);

}  // namespace gp
