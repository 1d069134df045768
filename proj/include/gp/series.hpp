#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gp/cayley.hpp"
#include "gp/words.hpp"

namespace gp {

  // The level construction for a colouring: dead vertices D (one colour
  // class) and living vertices L = V \ D. G_L is the subgroup generated by
  // the living vertex groups; for d in D, T_d is the set of t in G_L with no
  // reduced expression starting in a vertex group adjacent to d.

  // Membership predicate for T_d; replaceable so verification can be
  // exercised against deliberately wrong sets.
  using TdMembership = std::function<bool(NormalForm const&)>;

  // Throws InputError if d is living or t uses a non-living vertex.
  bool in_td(Presentation const&       p,
             VertexSet const&          living,
             VertexId                  d,
             std::span<const Syllable> t);
  bool in_td(Presentation const& p,
             VertexSet const&    living,
             VertexId            d,
             NormalForm const&   t);

  // t·α_{d,a} = ta if ta ∈ T_d, else t. The identity (a = identity of
  // G_l) is allowed and fixes t.
  NormalForm alpha(Presentation const& p,
                   VertexSet const&    living,
                   VertexId            d,
                   VertexId            l,
                   Elem                a,
                   NormalForm const&   t,
                   TdMembership const& member = {});

  struct VerificationReport {
    bool                       pass    = true;
    std::size_t                checked = 0;
    std::optional<std::string> counterexample;
  };

  // Elements of G_L of word length <= radius, breadth-first.
  std::vector<NormalForm> living_ball(Presentation const& p,
                                      VertexSet const&    living,
                                      int                 radius);

  // For t ∈ T_d in the ball and each generator a of a living G_l:
  // ta ∉ T_d ⇔ (d ∼ l and every syllable of t lies in a group adjacent to l).
  VerificationReport verify_star(Presentation const& p,
                                 VertexSet const&    living,
                                 VertexId            d,
                                 int                 radius,
                                 TdMembership const& member = {});

  // Every prefix of every reduced expression of t ∈ T_d lies in T_d, and
  // applying α along those syllables from 1 returns t.
  VerificationReport verify_prefix_closure(Presentation const& p,
                                           VertexSet const&    living,
                                           VertexId            d,
                                           int                 radius,
                                           TdMembership const& member = {});

  // α_{d,a}α_{d,b} = α_{d,ab} inside one vertex group, α_{d,a}α_{d,b} =
  // α_{d,b}α_{d,a} across adjacent vertex groups, and each α_{d,a} is
  // injective on the ball elements it maps back into the ball.
  VerificationReport verify_action(Presentation const& p,
                                   VertexSet const&    living,
                                   VertexId            d,
                                   int                 radius,
                                   TdMembership const& member = {});

  struct TdSample {
    VertexId                dead = 0;
    std::vector<NormalForm> elements;  // T_d up to the length bound
    bool                    truncated = false;
  };

  struct SeriesLevel {
    VertexSet             dead;
    VertexSet             living;
    std::vector<TdSample> factor;  // free product of copies G_{d,t}
  };

  struct SeriesReport {
    Coloring                 coloring;
    int                      length_bound = 4;
    std::vector<SeriesLevel> levels;
  };

  // Peels one colour class per level (largest class first, ties to the
  // class holding the smallest vertex). Throws InputError for an improper
  // colouring.
  SeriesReport build_series(Presentation const& p,
                            Coloring const&     coloring,
                            int                 length_bound = 4);

  struct DeadVertexVerification {
    VertexId           dead = 0;
    VerificationReport star;
    VerificationReport prefix_closure;
    VerificationReport action;
  };

  // All three verifications for every dead vertex of every level.
  std::vector<std::vector<DeadVertexVerification>>
  verify_series(Presentation const& p, SeriesReport const& report, int radius);

}  // namespace gp
