#include "gp/series.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gp/error.hpp"
#include "gp/word_io.hpp"

namespace gp {

  namespace {
    bool is_living(VertexSet const& living, VertexId v) {
      return std::binary_search(living.begin(), living.end(), v);
    }

    void check_context(Presentation const& p,
                       VertexSet const&    living,
                       VertexId            d) {
      p.graph().check_vertex(d);
      if (!std::is_sorted(living.begin(), living.end())) {
        throw InputError("living vertex set must be sorted");
      }
      if (is_living(living, d)) {
        throw InputError("vertex \"" + p.graph().name(d)
                         + "\" is living, not dead");
      }
    }

    void check_supported(Presentation const&       p,
                         VertexSet const&          living,
                         std::span<const Syllable> t) {
      for (auto s : t) {
        if (!is_living(living, s.vertex)) {
          throw InputError("syllable at vertex \"" + p.graph().name(s.vertex)
                           + "\" is not in a living vertex group");
        }
      }
    }

    TdMembership default_membership(Presentation const& p,
                                     VertexSet const&    living,
                                     VertexId            d) {
      return [&p, &living, d](NormalForm const& t) {
        return in_td(p, living, d, t);
      };
    }

    // Elements of G_l used to probe the action: the whole group when
    // finite, exponents -2..2 for Z.
    std::vector<Elem> probe_elements(VertexGroup const& g) {
      if (g.kind() == VertexGroup::Kind::infinite_cyclic) {
        return {0, 1, -1, 2, -2};
      }
      return g.elements();
    }

    bool all_adjacent_to(Presentation const& p, NormalForm const& t, VertexId l) {
      for (auto s : t.syllables()) {
        if (!p.commute(s.vertex, l)) {
          return false;
        }
      }
      return true;
    }

    std::string show(Presentation const& p, NormalForm const& t) {
      auto s = format_normal_form(p, t);
      return s.empty() ? "1" : s;
    }

    std::string show(Presentation const& p, VertexId l, Elem a) {
      if (p.group(l).is_identity(a)) {
        return "1";
      }
      return format_syllable(p, {l, a});
    }
  }  // namespace

  bool in_td(Presentation const& p,
             VertexSet const&    living,
             VertexId            d,
             NormalForm const&   t) {
    check_context(p, living, d);
    check_supported(p, living, t.syllables());
    for (auto i : initial_positions(p, t)) {
      if (p.commute(t.syllables()[i].vertex, d)) {
        return false;
      }
    }
    return true;
  }

  bool in_td(Presentation const&       p,
             VertexSet const&          living,
             VertexId                  d,
             std::span<const Syllable> t) {
    check_context(p, living, d);
    check_supported(p, living, t);
    return in_td(p, living, d, normalize(p, t));
  }

  NormalForm alpha(Presentation const& p,
                   VertexSet const&    living,
                   VertexId            d,
                   VertexId            l,
                   Elem                a,
                   NormalForm const&   t,
                   TdMembership const& member) {
    check_context(p, living, d);
    if (!is_living(living, l)) {
      throw InputError("α needs an element of a living vertex group");
    }
    if (p.group(l).is_identity(a)) {
      return t;
    }
    auto const& in = member ? member : default_membership(p, living, d);
    NormalForm  ta = multiply(p, t, Syllable{l, a});
    return in(ta) ? ta : t;
  }

  std::vector<NormalForm> living_ball(Presentation const& p,
                                      VertexSet const&    living,
                                      int                 radius) {
    auto [sub, original] = p.restrict_to(living);
    CayleyBall              b = ball(sub, radius);
    std::vector<NormalForm> out;
    out.reserve(b.size());
    for (auto const& g : b.elements) {
      Expression e = g.syllables();
      for (auto& s : e) {
        s.vertex = original[s.vertex];
      }
      out.push_back(normalize(p, e));
    }
    return out;
  }

  VerificationReport verify_star(Presentation const& p,
                                 VertexSet const&    living,
                                 VertexId            d,
                                 int                 radius,
                                 TdMembership const& member) {
    check_context(p, living, d);
    auto const& in = member ? member : default_membership(p, living, d);
    VerificationReport rep;
    for (auto const& t : living_ball(p, living, radius)) {
      if (!in(t)) {
        continue;
      }
      for (VertexId l : living) {
        for (Elem a : p.group(l).generators()) {
          ++rep.checked;
          bool leaves = !in(multiply(p, t, Syllable{l, a}));
          bool predicted = p.commute(d, l) && all_adjacent_to(p, t, l);
          if (leaves != predicted) {
            rep.pass = false;
            rep.counterexample = "t = " + show(p, t) + ", a = " + show(p, l, a)
                                 + ": ta " + (leaves ? "leaves" : "stays in")
                                 + " T_" + p.graph().name(d);
            return rep;
          }
        }
      }
    }
    return rep;
  }

  VerificationReport verify_prefix_closure(Presentation const& p,
                                           VertexSet const&    living,
                                           VertexId            d,
                                           int                 radius,
                                           TdMembership const& member) {
    check_context(p, living, d);
    auto const& in = member ? member : default_membership(p, living, d);
    VerificationReport rep;
    for (auto const& t : living_ball(p, living, radius)) {
      if (!in(t)) {
        continue;
      }
      for (auto const& tau : reduced_expressions(p, t)) {
        NormalForm prefix;
        NormalForm acted;
        for (std::size_t i = 0; i < tau.size(); ++i) {
          ++rep.checked;
          prefix = multiply(p, prefix, tau[i]);
          acted  = alpha(p, living, d, tau[i].vertex, tau[i].element, acted, in);
          if (!in(prefix)) {
            rep.pass           = false;
            rep.counterexample = "prefix " + show(p, prefix) + " of "
                                 + format_expression(p, tau) + " is not in T_"
                                 + p.graph().name(d);
            return rep;
          }
        }
        if (acted != t) {
          rep.pass           = false;
          rep.counterexample = "1·α along " + format_expression(p, tau)
                               + " gives " + show(p, acted);
          return rep;
        }
      }
    }
    return rep;
  }

  VerificationReport verify_action(Presentation const& p,
                                   VertexSet const&    living,
                                   VertexId            d,
                                   int                 radius,
                                   TdMembership const& member) {
    check_context(p, living, d);
    auto const& in = member ? member : default_membership(p, living, d);
    VerificationReport rep;
    auto               ball_elems = living_ball(p, living, radius);
    std::vector<NormalForm> td;
    for (auto const& t : ball_elems) {
      if (in(t)) {
        td.push_back(t);
      }
    }
    std::set<NormalForm> td_set(td.begin(), td.end());
    auto act = [&](VertexId l, Elem a, NormalForm const& t) {
      return alpha(p, living, d, l, a, t, in);
    };
    auto fail = [&](std::string msg) {
      rep.pass           = false;
      rep.counterexample = std::move(msg);
      return rep;
    };

    for (VertexId l : living) {
      auto const& g      = p.group(l);
      auto        probes = probe_elements(g);
      for (auto const& t : td) {
        for (Elem a : probes) {
          for (Elem b : probes) {
            ++rep.checked;
            if (act(l, b, act(l, a, t)) != act(l, g.multiply(a, b), t)) {
              return fail("α_a α_b ≠ α_ab at t = " + show(p, t) + ", a = "
                          + show(p, l, a) + ", b = " + show(p, l, b));
            }
          }
        }
      }
      for (VertexId m : living) {
        if (m <= l || !p.commute(l, m)) {
          continue;
        }
        auto probes_m = probe_elements(p.group(m));
        for (auto const& t : td) {
          for (Elem a : probes) {
            for (Elem b : probes_m) {
              ++rep.checked;
              if (act(m, b, act(l, a, t)) != act(l, a, act(m, b, t))) {
                return fail("α_a α_b ≠ α_b α_a at t = " + show(p, t)
                            + ", a = " + show(p, l, a)
                            + ", b = " + show(p, m, b));
              }
            }
          }
        }
      }
      for (Elem a : g.generators()) {
        std::map<NormalForm, NormalForm> preimage;
        for (auto const& t : td) {
          NormalForm image = act(l, a, t);
          if (td_set.count(image) == 0) {
            continue;
          }
          ++rep.checked;
          auto [it, fresh] = preimage.emplace(image, t);
          if (!fresh) {
            return fail("α_" + show(p, l, a) + " maps " + show(p, it->second)
                        + " and " + show(p, t) + " to " + show(p, image));
          }
        }
      }
    }
    return rep;
  }

  SeriesReport build_series(Presentation const& p,
                            Coloring const&     coloring,
                            int                 length_bound) {
    p.require_concrete();
    if (!is_proper(p.graph(), coloring)) {
      throw InputError("colouring is not proper");
    }
    if (length_bound < 0) {
      throw InputError("length bound must be non-negative");
    }
    SeriesReport rep;
    rep.coloring     = coloring;
    rep.length_bound = length_bound;

    VertexSet living(p.size());
    for (VertexId v = 0; v < p.size(); ++v) {
      living[v] = v;
    }
    while (!living.empty()) {
      std::map<std::uint32_t, VertexSet> classes;
      for (VertexId v : living) {
        classes[coloring.color[v]].push_back(v);
      }
      VertexSet const* dead = nullptr;
      for (auto const& [c, members] : classes) {
        if (dead == nullptr || members.size() > dead->size()
            || (members.size() == dead->size() && members[0] < (*dead)[0])) {
          dead = &members;
        }
      }
      SeriesLevel level;
      level.dead = *dead;
      for (VertexId v : living) {
        if (!std::binary_search(dead->begin(), dead->end(), v)) {
          level.living.push_back(v);
        }
      }
      auto elems = living_ball(p, level.living, length_bound + 1);
      for (VertexId d : level.dead) {
        TdSample sample;
        sample.dead = d;
        for (auto const& t : elems) {
          if (!in_td(p, level.living, d, t)) {
            continue;
          }
          if (geodesic_length(p, t) <= length_bound) {
            sample.elements.push_back(t);
          } else {
            sample.truncated = true;
          }
        }
        level.factor.push_back(std::move(sample));
      }
      living = level.living;
      rep.levels.push_back(std::move(level));
    }
    return rep;
  }

  std::vector<std::vector<DeadVertexVerification>>
  verify_series(Presentation const& p, SeriesReport const& report, int radius) {
    std::vector<std::vector<DeadVertexVerification>> out;
    for (auto const& level : report.levels) {
      auto& row = out.emplace_back();
      for (VertexId d : level.dead) {
        DeadVertexVerification v;
        v.dead           = d;
        v.star           = verify_star(p, level.living, d, radius);
        v.prefix_closure = verify_prefix_closure(p, level.living, d, radius);
        v.action         = verify_action(p, level.living, d, radius);
        row.push_back(std::move(v));
      }
    }
    return out;
  }

}  // namespace gp
