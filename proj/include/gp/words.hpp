#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gp/presentation.hpp"

namespace gp {

  // A non-identity element of one vertex group, tagged with its vertex.
  struct Syllable {
    VertexId vertex  = 0;
    Elem     element = 0;

    auto operator<=>(Syllable const&) const = default;
  };

  // A product of syllables; need not be reduced.
  using Expression = std::vector<Syllable>;

  // One generator from X_v.
  struct Letter {
    VertexId vertex  = 0;
    Elem     element = 0;

    auto operator<=>(Letter const&) const = default;
  };

  using LetterWord = std::vector<Letter>;

  // Canonical reduced expression of a group element: reduced (no two
  // syllables of one vertex can be shuffled together) and, among all
  // shuffle-equivalent reduced expressions, the lexicographically least
  // sequence of vertex indices. The identity is the empty form.
  class NormalForm {
   public:
    NormalForm() = default;

    std::vector<Syllable> const& syllables() const noexcept {
      return syllables_;
    }
    std::size_t size() const noexcept {
      return syllables_.size();
    }
    bool is_identity() const noexcept {
      return syllables_.empty();
    }

    auto operator<=>(NormalForm const&) const = default;

   private:
    explicit NormalForm(std::vector<Syllable> s) : syllables_(std::move(s)) {}

    friend NormalForm canonical_form(Presentation const&, Expression);

    std::vector<Syllable> syllables_;
  };

  struct NormalFormHash {
    std::size_t operator()(NormalForm const& nf) const noexcept;
  };

  // Throws InputError unless s names a vertex of p and a non-identity
  // element of its (concrete) group.
  void check_syllable(Presentation const& p, Syllable s);
  // Same, and additionally the element must lie in X_v.
  void check_letter(Presentation const& p, Letter x);

  // Orders an already reduced expression canonically.
  NormalForm canonical_form(Presentation const& p, Expression reduced);

  NormalForm normalize(Presentation const& p, std::span<const Syllable> e);

  // nf · s, nf · other, nf⁻¹.
  NormalForm multiply(Presentation const& p, NormalForm const& nf, Syllable s);
  NormalForm multiply(Presentation const& p,
                      NormalForm const&   lhs,
                      NormalForm const&   rhs);
  NormalForm inverse(Presentation const& p, NormalForm const& nf);

  bool equal(Presentation const&       p,
             std::span<const Syllable> e1,
             std::span<const Syllable> e2);

  std::int64_t geodesic_length(Presentation const& p, NormalForm const& nf);
  std::int64_t geodesic_length(Presentation const&       p,
                               std::span<const Syllable> e);

  Expression to_expression(std::span<const Letter> w);
  NormalForm normalize(Presentation const& p, std::span<const Letter> w);

  // A geodesic word for nf: one letter per finite syllable, |m| letters for
  // an infinite cyclic exponent m.
  LetterWord geodesic_spelling(Presentation const& p, NormalForm const& nf);

  bool is_geodesic(Presentation const& p, std::span<const Letter> w);

  // The two phases of one shortening step: `shuffled` is w after shuffles
  // only, and [begin, end) of it is a subword over a single X_v that gets
  // replaced by the shorter `replacement`.
  struct ShortenStep {
    LetterWord  shuffled;
    std::size_t begin = 0;
    std::size_t end   = 0;
    LetterWord  replacement;
    LetterWord  result;
    std::size_t shuffles = 0;  // adjacent transpositions performed
  };

  // One shortening step for a non-geodesic word; throws
  // PreconditionViolation when w is already geodesic.
  ShortenStep shorten_step(Presentation const& p, std::span<const Letter> w);
  LetterWord  shorten(Presentation const& p, std::span<const Letter> w);

  // Shortest suffix β of a geodesic α with βx non-geodesic, plus the
  // letter-membership facts about it.
  struct NongeodesicSuffix {
    LetterWord  beta;
    std::size_t start = 0;  // β = α[start, |α|)
    bool        first_in_vx = false;
    bool        rest_in_vx_or_adjacent = false;
    bool        only_first_in_vx = false;
  };

  NongeodesicSuffix nongeodesic_suffix(Presentation const&     p,
                                       std::span<const Letter> alpha,
                                       Letter                  x);

  // Positions of the syllables of nf that can be shuffled to the front.
  std::vector<std::size_t> initial_positions(Presentation const& p,
                                             NormalForm const&   nf);

  // Every expression reachable from e by shuffles alone, in lexicographic
  // order; throws ResourceError past `cap` members.
  std::vector<Expression> shuffle_class(Presentation const&       p,
                                        std::span<const Syllable> e,
                                        std::size_t               cap = 100000);

  // Reduced expressions of the element nf (its shuffle class).
  std::vector<Expression> reduced_expressions(Presentation const& p,
                                              NormalForm const&   nf,
                                              std::size_t         cap = 100000);

}  // namespace gp
