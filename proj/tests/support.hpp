#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gp/graph.hpp"
#include "gp/presentation.hpp"
#include "gp/words.hpp"

namespace gp::test {

  // All unordered pairs of 0..n-1 in a fixed order; bit i of a mask selects
  // pair i.
  inline std::vector<std::pair<VertexId, VertexId>> all_pairs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  inline std::vector<std::string> names(std::size_t n, std::string const& prefix = "v") {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
      out.push_back(prefix + std::to_string(i));
    }
    return out;
  }

  inline SimplicialGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
    auto                                       pairs = all_pairs(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        edges.push_back(pairs[i]);
      }
    }
    return SimplicialGraph::from_edges(names(n), edges);
  }

  inline SimplicialGraph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution                edge(density);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto e : all_pairs(n)) {
      if (edge(rng)) {
        edges.push_back(e);
      }
    }
    return SimplicialGraph::from_edges(names(n), edges);
  }

  // a - b - c
  inline SimplicialGraph p3() {
    std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}};
    return SimplicialGraph::from_edges({"a", "b", "c"}, e);
  }

  // a - b - c - d
  inline SimplicialGraph p4() {
    std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}, {2, 3}};
    return SimplicialGraph::from_edges({"a", "b", "c", "d"}, e);
  }

  inline SimplicialGraph edge_graph(std::string const& a = "x",
                                    std::string const& b = "y") {
    std::vector<std::pair<VertexId, VertexId>> e{{0, 1}};
    return SimplicialGraph::from_edges({a, b}, e);
  }

  inline Presentation uniform(SimplicialGraph g, VertexGroup h) {
    return Presentation::uniform(std::move(g), std::move(h));
  }

  // Random expression of `length` syllables with uniformly chosen vertices and
  // non-identity elements; Z exponents are drawn from ±1..±max_exp.
  inline Expression random_expression(Presentation const& p,
                                      std::size_t         length,
                                      std::mt19937_64&    rng,
                                      std::int64_t        max_exp = 2) {
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(p.size() - 1));
    Expression                              e;
    for (std::size_t i = 0; i < length; ++i) {
      VertexId    v = pick(rng);
      auto const& g = p.group(v);
      if (g.kind() == VertexGroup::Kind::infinite_cyclic) {
        std::uniform_int_distribution<std::int64_t> m(1, max_exp);
        std::bernoulli_distribution                  neg(0.5);
        e.push_back({v, neg(rng) ? -m(rng) : m(rng)});
      } else {
        auto gens = g.generators();
        std::uniform_int_distribution<std::size_t> k(0, gens.size() - 1);
        e.push_back({v, gens[k(rng)]});
      }
    }
    return e;
  }

  inline LetterWord random_word(Presentation const& p,
                                std::size_t         length,
                                std::mt19937_64&    rng) {
    auto                                       letters = [&] {
      std::vector<Letter> out;
      for (VertexId v = 0; v < p.size(); ++v) {
        for (Elem a : p.group(v).generators()) {
          out.push_back({v, a});
        }
      }
      return out;
    }();
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    LetterWord                                 w;
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back(letters[pick(rng)]);
    }
    return w;
  }

}  // namespace gp::test
