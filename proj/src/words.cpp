#include "gp/words.hpp"

#include <algorithm>
#include <set>

#include "gp/error.hpp"

namespace gp {

  std::size_t NormalFormHash::operator()(NormalForm const& nf) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto const& s : nf.syllables()) {
      h ^= s.vertex + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= static_cast<std::size_t>(s.element) + 0x9e3779b97f4a7c15ULL
           + (h << 6) + (h >> 2);
    }
    return h;
  }

  void check_syllable(Presentation const& p, Syllable s) {
    p.graph().check_vertex(s.vertex);
    auto const& g = p.group(s.vertex);
    if (!g.concrete()) {
      throw UnsupportedOperation("vertex \"" + p.graph().name(s.vertex)
                                 + "\" has an opaque group");
    }
    if (!g.contains(s.element)) {
      throw InputError("element " + std::to_string(s.element)
                       + " is not in the group of vertex \""
                       + p.graph().name(s.vertex) + "\"");
    }
    if (g.is_identity(s.element)) {
      throw InputError("identity syllable at vertex \""
                       + p.graph().name(s.vertex) + "\"");
    }
  }

  void check_letter(Presentation const& p, Letter x) {
    check_syllable(p, {x.vertex, x.element});
    auto gens = p.group(x.vertex).generators();
    if (std::find(gens.begin(), gens.end(), x.element) == gens.end()) {
      throw InputError("element " + std::to_string(x.element)
                       + " is not a generator of vertex \""
                       + p.graph().name(x.vertex) + "\"");
    }
  }

  namespace {
    // Appends s to a reduced expression keeping it reduced: s merges with
    // the latest syllable of its vertex that every later syllable commutes
    // with; an identity product deletes that syllable.
    void append_reduced(Presentation const& p, Expression& red, Syllable s) {
      for (std::size_t j = red.size(); j-- > 0;) {
        if (red[j].vertex == s.vertex) {
          auto const& g    = p.group(s.vertex);
          Elem        prod = g.multiply(red[j].element, s.element);
          if (g.is_identity(prod)) {
            red.erase(red.begin() + static_cast<std::ptrdiff_t>(j));
          } else {
            red[j].element = prod;
          }
          return;
        }
        if (!p.commute(red[j].vertex, s.vertex)) {
          break;
        }
      }
      red.push_back(s);
    }
  }  // namespace

  NormalForm canonical_form(Presentation const& p, Expression red) {
    // Repeatedly take the smallest vertex among syllables with no
    // non-commuting predecessor left (Anisimov-Knuth lexicographic form of
    // the trace).
    std::size_t              n = red.size();
    std::vector<std::size_t> blockers(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!p.commute(red[j].vertex, red[i].vertex)) {
          ++blockers[i];
        }
      }
    }
    std::vector<bool>     taken(n, false);
    std::vector<Syllable> out;
    out.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!taken[i] && blockers[i] == 0
            && (best == n || red[i].vertex < red[best].vertex)) {
          best = i;
        }
      }
      taken[best] = true;
      out.push_back(red[best]);
      for (std::size_t j = best + 1; j < n; ++j) {
        if (!taken[j] && !p.commute(red[best].vertex, red[j].vertex)) {
          --blockers[j];
        }
      }
    }
    return NormalForm(std::move(out));
  }

  NormalForm normalize(Presentation const& p, std::span<const Syllable> e) {
    p.require_concrete();
    Expression red;
    red.reserve(e.size());
    for (auto s : e) {
      check_syllable(p, s);
      append_reduced(p, red, s);
    }
    return canonical_form(p, std::move(red));
  }

  NormalForm multiply(Presentation const& p, NormalForm const& nf, Syllable s) {
    check_syllable(p, s);
    Expression red = nf.syllables();
    append_reduced(p, red, s);
    return canonical_form(p, std::move(red));
  }

  NormalForm multiply(Presentation const& p,
                      NormalForm const&   lhs,
                      NormalForm const&   rhs) {
    Expression red = lhs.syllables();
    for (auto s : rhs.syllables()) {
      append_reduced(p, red, s);
    }
    return canonical_form(p, std::move(red));
  }

  NormalForm inverse(Presentation const& p, NormalForm const& nf) {
    // the reverse of a reduced expression is reduced
    Expression red(nf.syllables().rbegin(), nf.syllables().rend());
    for (auto& s : red) {
      s.element = p.group(s.vertex).inverse(s.element);
    }
    return canonical_form(p, std::move(red));
  }

  bool equal(Presentation const&       p,
             std::span<const Syllable> e1,
             std::span<const Syllable> e2) {
    return normalize(p, e1) == normalize(p, e2);
  }

  std::int64_t geodesic_length(Presentation const& p, NormalForm const& nf) {
    std::int64_t total = 0;
    for (auto s : nf.syllables()) {
      total += p.group(s.vertex).geodesic_length(s.element);
    }
    return total;
  }

  std::int64_t geodesic_length(Presentation const&       p,
                               std::span<const Syllable> e) {
    return geodesic_length(p, normalize(p, e));
  }

  Expression to_expression(std::span<const Letter> w) {
    Expression e;
    e.reserve(w.size());
    for (auto x : w) {
      e.push_back({x.vertex, x.element});
    }
    return e;
  }

  NormalForm normalize(Presentation const& p, std::span<const Letter> w) {
    for (auto x : w) {
      check_letter(p, x);
    }
    return normalize(p, to_expression(w));
  }

  LetterWord geodesic_spelling(Presentation const& p, NormalForm const& nf) {
    LetterWord w;
    for (auto s : nf.syllables()) {
      auto const& g = p.group(s.vertex);
      if (g.kind() == VertexGroup::Kind::infinite_cyclic) {
        Elem step = s.element > 0 ? 1 : -1;
        for (std::int64_t i = 0; i < g.geodesic_length(s.element); ++i) {
          w.push_back({s.vertex, step});
        }
      } else {
        w.push_back({s.vertex, s.element});
      }
    }
    return w;
  }

  bool is_geodesic(Presentation const& p, std::span<const Letter> w) {
    return static_cast<std::int64_t>(w.size())
           == geodesic_length(p, normalize(p, w));
  }

  namespace {
    struct Block {
      std::size_t begin;
      std::size_t end;
      VertexId    vertex;
    };

    std::vector<Block> blocks_of(std::span<const Letter> w) {
      std::vector<Block> out;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j].vertex == w[i].vertex) {
          ++j;
        }
        out.push_back({i, j, w[i].vertex});
        i = j;
      }
      return out;
    }

    Elem block_element(Presentation const&     p,
                       std::span<const Letter> w,
                       Block const&            b) {
      auto const& g = p.group(b.vertex);
      Elem        x = g.identity();
      for (std::size_t i = b.begin; i < b.end; ++i) {
        x = g.multiply(x, w[i].element);
      }
      return x;
    }
  }  // namespace

  ShortenStep shorten_step(Presentation const& p, std::span<const Letter> w) {
    if (is_geodesic(p, w)) {
      throw PreconditionViolation("shorten: the word is already geodesic");
    }
    ShortenStep step;
    step.shuffled.assign(w.begin(), w.end());
    LetterWord& cur = step.shuffled;

    // Shuffle phase: bring two blocks over the same X_v together whenever
    // everything between them commutes with v.
    while (true) {
      auto blocks = blocks_of(cur);
      bool moved  = false;
      for (std::size_t i = 0; i < blocks.size() && !moved; ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          if (blocks[j].vertex == blocks[i].vertex) {
            bool all_commute = true;
            for (std::size_t m = i + 1; m < j && all_commute; ++m) {
              all_commute = p.commute(blocks[m].vertex, blocks[i].vertex);
            }
            if (all_commute) {
              auto const& bi = blocks[i];
              auto const& bj = blocks[j];
              std::rotate(cur.begin() + static_cast<std::ptrdiff_t>(bi.end),
                          cur.begin() + static_cast<std::ptrdiff_t>(bj.begin),
                          cur.begin() + static_cast<std::ptrdiff_t>(bj.end));
              step.shuffles += (bj.begin - bi.end) * (bj.end - bj.begin);
              moved = true;
            }
            break;
          }
        }
      }
      if (!moved) {
        break;
      }
    }

    // Replacement phase: some block is now a non-geodesic word over X_v.
    for (auto const& b : blocks_of(cur)) {
      auto const& g   = p.group(b.vertex);
      Elem        x   = block_element(p, cur, b);
      auto        len = static_cast<std::int64_t>(b.end - b.begin);
      if (g.geodesic_length(x) < len) {
        step.begin = b.begin;
        step.end   = b.end;
        if (!g.is_identity(x)) {
          step.replacement = geodesic_spelling(
              p, normalize(p, Expression{{b.vertex, x}}));
        }
        step.result.assign(cur.begin(),
                           cur.begin() + static_cast<std::ptrdiff_t>(b.begin));
        step.result.insert(step.result.end(),
                           step.replacement.begin(),
                           step.replacement.end());
        step.result.insert(step.result.end(),
                           cur.begin() + static_cast<std::ptrdiff_t>(b.end),
                           cur.end());
        return step;
      }
    }
    // unreachable for a non-geodesic word: a reduced block expression with
    // geodesic blocks spells a geodesic
    throw Error("shorten: no non-geodesic block found");
  }

  LetterWord shorten(Presentation const& p, std::span<const Letter> w) {
    return shorten_step(p, w).result;
  }

  NongeodesicSuffix nongeodesic_suffix(Presentation const&     p,
                                       std::span<const Letter> alpha,
                                       Letter                  x) {
    check_letter(p, x);
    if (!is_geodesic(p, alpha)) {
      throw PreconditionViolation("nongeodesic_suffix: α is not geodesic");
    }
    LetterWord ax(alpha.begin(), alpha.end());
    ax.push_back(x);
    if (is_geodesic(p, ax)) {
      throw PreconditionViolation("nongeodesic_suffix: αx is geodesic");
    }
    NongeodesicSuffix r;
    for (std::size_t len = 1; len <= alpha.size(); ++len) {
      std::size_t start = alpha.size() - len;
      LetterWord  bx(alpha.begin() + static_cast<std::ptrdiff_t>(start),
                    alpha.end());
      bx.push_back(x);
      if (!is_geodesic(p, bx)) {
        r.start = start;
        r.beta.assign(alpha.begin() + static_cast<std::ptrdiff_t>(start),
                      alpha.end());
        break;
      }
    }
    VertexId v = x.vertex;
    r.first_in_vx            = r.beta.front().vertex == v;
    r.rest_in_vx_or_adjacent = true;
    r.only_first_in_vx       = r.first_in_vx;
    for (std::size_t i = 1; i < r.beta.size(); ++i) {
      VertexId u = r.beta[i].vertex;
      if (u == v) {
        r.only_first_in_vx = false;
      } else if (!p.commute(u, v)) {
        r.rest_in_vx_or_adjacent = false;
      }
    }
    return r;
  }

  std::vector<std::size_t> initial_positions(Presentation const& p,
                                             NormalForm const&   nf) {
    std::vector<std::size_t> out;
    auto const&              s = nf.syllables();
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) {
        free = p.commute(s[j].vertex, s[i].vertex);
      }
      if (free) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<Expression> shuffle_class(Presentation const&       p,
                                        std::span<const Syllable> e,
                                        std::size_t               cap) {
    std::set<Expression>    seen{Expression(e.begin(), e.end())};
    std::vector<Expression> todo{Expression(e.begin(), e.end())};
    while (!todo.empty()) {
      Expression cur = std::move(todo.back());
      todo.pop_back();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i].vertex != cur[i + 1].vertex
            && p.commute(cur[i].vertex, cur[i + 1].vertex)) {
          Expression next = cur;
          std::swap(next[i], next[i + 1]);
          if (seen.insert(next).second) {
            if (seen.size() > cap) {
              throw ResourceError("shuffle class exceeds "
                                  + std::to_string(cap) + " expressions");
            }
            todo.push_back(std::move(next));
          }
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<Expression> reduced_expressions(Presentation const& p,
                                              NormalForm const&   nf,
                                              std::size_t         cap) {
    return shuffle_class(p, nf.syllables(), cap);
  }

}  // namespace gp
