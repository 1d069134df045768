#include "gp/oracle.hpp"

#include <algorithm>
#include <set>

#include "gp/error.hpp"

namespace gp {

  namespace {
    std::set<Expression> closure(Presentation const&       p,
                                 std::span<const Syllable> e,
                                 std::size_t               bound) {
      if (bound > oracle_max_bound) {
        throw ResourceError("oracle bound " + std::to_string(bound)
                            + " exceeds " + std::to_string(oracle_max_bound));
      }
      if (e.size() > bound) {
        throw ResourceError("expression has " + std::to_string(e.size())
                            + " syllables, oracle bound is "
                            + std::to_string(bound));
      }
      for (auto s : e) {
        check_syllable(p, s);
      }
      std::set<Expression>    seen{Expression(e.begin(), e.end())};
      std::vector<Expression> todo{Expression(e.begin(), e.end())};
      auto visit = [&](Expression next) {
        if (seen.insert(next).second) {
          todo.push_back(std::move(next));
        }
      };
      while (!todo.empty()) {
        Expression cur = std::move(todo.back());
        todo.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
          VertexId u = cur[i].vertex, v = cur[i + 1].vertex;
          if (u == v) {
            auto const& g    = p.group(u);
            Elem        prod = g.multiply(cur[i].element, cur[i + 1].element);
            Expression  next = cur;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (g.is_identity(prod)) {
              next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
              next[i].element = prod;
            }
            visit(std::move(next));
          } else if (p.commute(u, v)) {
            Expression next = cur;
            std::swap(next[i], next[i + 1]);
            visit(std::move(next));
          }
        }
      }
      return seen;
    }
  }  // namespace

  std::vector<Expression> oracle_reduced_forms(Presentation const&       p,
                                               std::span<const Syllable> e,
                                               std::size_t               bound) {
    auto        all = closure(p, e, bound);
    std::size_t shortest = e.size();
    for (auto const& x : all) {
      shortest = std::min(shortest, x.size());
    }
    std::vector<Expression> out;
    for (auto const& x : all) {
      if (x.size() == shortest) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool oracle_equal(Presentation const&       p,
                    std::span<const Syllable> e1,
                    std::span<const Syllable> e2,
                    std::size_t               bound) {
    auto c1 = closure(p, e1, bound);
    for (auto const& r : oracle_reduced_forms(p, e2, bound)) {
      if (c1.count(r) != 0) {
        return true;
      }
    }
    return false;
  }

}  // namespace gp
