#include "gp/structure.hpp"

#include "gp/error.hpp"

namespace gp {

  HyperbolicityReport decide_hyperbolic(Presentation const& p) {
    auto const&         g = p.graph();
    std::size_t         n = g.size();
    HyperbolicityReport r;

    // evaluate the metadata first so a missing flag fails before any verdict
    std::vector<bool> infinite(n);
    for (VertexId v = 0; v < n; ++v) {
      try {
        infinite[v] = !p.group(v).is_finite();
        if (!p.group(v).is_hyperbolic() && r.cond_i) {
          r.cond_i                = false;
          r.non_hyperbolic_vertex = v;
        }
      } catch (MissingMetadata const& e) {
        throw MissingMetadata("vertex \"" + g.name(v) + "\": " + e.what());
      }
    }

    for (auto [u, v] : g.edges()) {
      if (infinite[u] && infinite[v]) {
        r.cond_ii                = false;
        r.adjacent_infinite_pair = {u, v};
        break;
      }
    }

    for (VertexId v = 0; v < n && r.cond_iii; ++v) {
      if (!infinite[v]) {
        continue;
      }
      VertexSet nb = link(g, v);
      for (std::size_t i = 0; i < nb.size() && r.cond_iii; ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!g.adjacent(nb[i], nb[j])) {
            r.cond_iii        = false;
            r.non_clique_link = {v, {nb[i], nb[j]}};
            break;
          }
        }
      }
    }

    r.induced_square = has_induced_cycle_ge(g, CycleLength::exactly_4);
    r.cond_iv        = !r.induced_square.has_value();
    r.verdict        = r.cond_i && r.cond_ii && r.cond_iii && r.cond_iv;
    return r;
  }

  SurfaceCharacteristics surface_characteristics(std::int64_t n) {
    if (n < 3) {
      throw InputError("surface characteristics need n >= 3");
    }
    if (n > 60) {
      throw ResourceError("surface characteristics overflow beyond n = 60");
    }
    SurfaceCharacteristics s;
    s.euler = (4 - n) * (std::int64_t{1} << (n - 2));
    s.genus = 1 + (n - 4) * (std::int64_t{1} << (n - 3));
    return s;
  }

  KernelReport decide_kernel_free(Presentation const& p) {
    KernelReport r;
    r.witness = has_induced_cycle_ge(p.graph(), CycleLength::at_least_4);
    r.free    = !r.witness.has_value();
    if (r.witness) {
      r.genus_if_cycle
          = surface_characteristics(static_cast<std::int64_t>(r.witness->size()))
                .genus;
    }
    return r;
  }

  std::vector<Elem> project_to_direct_product(Presentation const&       p,
                                              std::span<const Syllable> e) {
    p.require_concrete();
    std::vector<Elem> out;
    for (VertexId v = 0; v < p.size(); ++v) {
      out.push_back(p.group(v).identity());
    }
    for (auto s : e) {
      check_syllable(p, s);
      out[s.vertex] = p.group(s.vertex).multiply(out[s.vertex], s.element);
    }
    return out;
  }

  bool in_kernel(Presentation const& p, std::span<const Syllable> e) {
    auto proj = project_to_direct_product(p, e);
    for (VertexId v = 0; v < p.size(); ++v) {
      if (!p.group(v).is_identity(proj[v])) {
        return false;
      }
    }
    return true;
  }

}  // namespace gp
