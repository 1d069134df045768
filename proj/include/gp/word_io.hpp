#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gp/words.hpp"

namespace gp {

  // Word syntax: whitespace-separated tokens "vertex[^exp]"; for table
  // groups "vertex:element" names an element directly. Cyclic exponents are
  // reduced mod the order and tokens that evaluate to the identity are
  // dropped.
  Expression parse_expression(Presentation const& p, std::string_view text);

  // As parse_expression, then spelled over X: one letter per finite
  // syllable, |m| letters for an infinite cyclic exponent m.
  LetterWord parse_letter_word(Presentation const& p, std::string_view text);

  std::string format_syllable(Presentation const& p, Syllable s);
  std::string format_expression(Presentation const& p, std::span<const Syllable> e);
  std::string format_word(Presentation const& p, std::span<const Letter> w);
  std::string format_normal_form(Presentation const& p, NormalForm const& nf);

}  // namespace gp
