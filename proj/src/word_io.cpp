#include "gp/word_io.hpp"

#include <charconv>
#include <sstream>

#include "gp/error.hpp"

namespace gp {

  namespace {
    std::int64_t parse_int(std::string_view s, std::string_view token) {
      std::int64_t v   = 0;
      auto const*  end = s.data() + s.size();
      auto [ptr, ec]   = std::from_chars(s.data(), end, v);
      if (ec != std::errc{} || ptr != end) {
        throw InputError("bad exponent in token \"" + std::string(token) + "\"");
      }
      return v;
    }

    // Builds the generator-power syllable for a cyclic group.
    std::optional<Syllable> cyclic_power(Presentation const& p,
                                         VertexId            v,
                                         std::int64_t        m) {
      auto const& g = p.group(v);
      Elem        x = g.power(1, m);
      if (g.is_identity(x)) {
        return std::nullopt;
      }
      return Syllable{v, x};
    }
  }  // namespace

  Expression parse_expression(Presentation const& p, std::string_view text) {
    Expression         e;
    std::istringstream in{std::string(text)};
    std::string        token;
    std::size_t        position = 0;
    while (in >> token) {
      ++position;
      auto caret = token.find('^');
      auto colon = token.find(':');
      std::string name = token.substr(0, std::min(caret, colon));
      auto        v    = p.graph().find(name);
      if (!v) {
        throw InputError("word token " + std::to_string(position) + " (\""
                         + token + "\"): unknown vertex \"" + name + "\"");
      }
      auto const& g = p.group(*v);
      if (!g.concrete()) {
        throw UnsupportedOperation("word token " + std::to_string(position)
                                   + ": vertex \"" + name
                                   + "\" has an opaque group");
      }
      if (colon != std::string::npos) {
        if (g.kind() != VertexGroup::Kind::finite_table) {
          throw InputError("word token " + std::to_string(position)
                           + ": \"v:element\" needs a table group");
        }
        auto x = g.element_by_name(token.substr(colon + 1));
        if (!x) {
          throw InputError("word token " + std::to_string(position)
                           + ": unknown element \"" + token.substr(colon + 1)
                           + "\"");
        }
        if (!g.is_identity(*x)) {
          e.push_back({*v, *x});
        }
        continue;
      }
      if (g.kind() == VertexGroup::Kind::finite_table) {
        throw InputError("word token " + std::to_string(position)
                         + ": table groups need \"vertex:element\"");
      }
      std::int64_t m = 1;
      if (caret != std::string::npos) {
        m = parse_int(std::string_view(token).substr(caret + 1), token);
      }
      if (auto s = cyclic_power(p, *v, m)) {
        e.push_back(*s);
      }
    }
    return e;
  }

  LetterWord parse_letter_word(Presentation const& p, std::string_view text) {
    LetterWord w;
    for (auto s : parse_expression(p, text)) {
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

  std::string format_syllable(Presentation const& p, Syllable s) {
    auto const& g    = p.group(s.vertex);
    std::string name = p.graph().name(s.vertex);
    if (g.kind() == VertexGroup::Kind::finite_table) {
      return name + ":" + g.element_name(s.element);
    }
    if (s.element == 1) {
      return name;
    }
    return name + "^" + std::to_string(s.element);
  }

  std::string format_expression(Presentation const&       p,
                                std::span<const Syllable> e) {
    std::string out;
    for (auto s : e) {
      if (!out.empty()) {
        out += ' ';
      }
      out += format_syllable(p, s);
    }
    return out;
  }

  std::string format_word(Presentation const& p, std::span<const Letter> w) {
    return format_expression(p, to_expression(w));
  }

  std::string format_normal_form(Presentation const& p, NormalForm const& nf) {
    return format_expression(p, nf.syllables());
  }

}  // namespace gp
