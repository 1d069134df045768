#include <doctest.h>

#include <set>

#include "gp/error.hpp"
#include "gp/graph.hpp"
#include "support.hpp"

using namespace gp;

namespace {

  // Independent oracle: every vertex subset of size >= 4 (or exactly 4)
  // whose induced subgraph is a single cycle.
  bool induces_cycle(SimplicialGraph const& g, std::uint32_t subset) {
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < g.size(); ++v) {
      if ((subset >> v) & 1U) {
        vs.push_back(v);
      }
    }
    for (auto v : vs) {
      int deg = 0;
      for (auto w : vs) {
        deg += g.adjacent(v, w) ? 1 : 0;
      }
      if (deg != 2) {
        return false;
      }
    }
    // 2-regular: a single cycle iff connected
    std::set<VertexId> seen{vs[0]};
    std::vector<VertexId> stack{vs[0]};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : vs) {
        if (g.adjacent(v, w) && seen.insert(w).second) {
          stack.push_back(w);
        }
      }
    }
    return seen.size() == vs.size();
  }

  bool oracle_has_cycle(SimplicialGraph const& g, bool exactly_four) {
    std::uint32_t n = static_cast<std::uint32_t>(g.size());
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      int k = __builtin_popcount(s);
      if (k < 4 || (exactly_four && k != 4)) {
        continue;
      }
      if (induces_cycle(g, s)) {
        return true;
      }
    }
    return false;
  }

  bool is_induced_cycle(SimplicialGraph const& g, std::vector<VertexId> const& c) {
    std::uint32_t s = 0;
    for (auto v : c) {
      s |= 1U << v;
    }
    if (static_cast<std::size_t>(__builtin_popcount(s)) != c.size()) {
      return false;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!g.adjacent(c[i], c[(i + 1) % c.size()])) {
        return false;
      }
    }
    return induces_cycle(g, s);
  }

  // Smallest k admitting a proper colouring, by exhaustive assignment.
  std::uint32_t oracle_chromatic(SimplicialGraph const& g) {
    std::size_t n = g.size();
    if (n == 0) {
      return 0;
    }
    for (std::uint32_t k = 1;; ++k) {
      std::vector<std::uint32_t> col(n, 0);
      while (true) {
        bool ok = true;
        for (VertexId u = 0; u < n && ok; ++u) {
          for (VertexId v = u + 1; v < n && ok; ++v) {
            ok = !(g.adjacent(u, v) && col[u] == col[v]);
          }
        }
        if (ok) {
          return k;
        }
        std::size_t i = 0;
        while (i < n && ++col[i] == k) {
          col[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    }
  }

  SimplicialGraph petersen() {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return SimplicialGraph::from_edges(test::names(10), e);
  }

}  // namespace

TEST_CASE("graph construction rejects loops, duplicate edges and names") {
  SimplicialGraph g({"a", "b"});
  g.add_edge(0, 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 7), InputError);
  CHECK_THROWS_AS(SimplicialGraph({"a", "a"}), InputError);
  CHECK(g.id("b") == 1);
  CHECK_THROWS_AS(g.id("zz"), InputError);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("induced subgraph") {
  auto c4  = graphs::cycle(4);
  auto sub = induced_subgraph(c4, {0, 1, 2});
  CHECK(sub.graph.size() == 3);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.graph.adjacent(0, 1));
  CHECK(sub.graph.adjacent(1, 2));
  CHECK_FALSE(sub.graph.adjacent(0, 2));
  CHECK(sub.graph.name(2) == "u3");

  CHECK(induced_subgraph(c4, {0, 1, 2, 3}).graph == c4);

  auto c5 = graphs::cycle(5);
  auto p  = induced_subgraph(c5, {0, 1, 2, 3}).graph;
  CHECK(p.edge_count() == 3);
  CHECK_FALSE(has_induced_cycle_ge(p, CycleLength::exactly_4));

  CHECK_THROWS_AS(induced_subgraph(c4, {0, 9}), InputError);
}

TEST_CASE("induced subgraph restricts twice as once to the intersection") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_graph(7, 0.5, rng);
    std::uint32_t a = rng() & 0x7F, b = rng() & 0x7F;
    VertexSet outer;
    for (VertexId v = 0; v < 7; ++v) {
      if ((a >> v) & 1U) {
        outer.push_back(v);
      }
    }
    auto first = induced_subgraph(g, outer);
    VertexSet inner_local, both;
    for (VertexId i = 0; i < outer.size(); ++i) {
      if ((b >> outer[i]) & 1U) {
        inner_local.push_back(i);
        both.push_back(outer[i]);
      }
    }
    auto twice = induced_subgraph(first.graph, inner_local);
    auto once  = induced_subgraph(g, both);
    CHECK(twice.graph == once.graph);
  }
}

TEST_CASE("link and clique") {
  auto c4 = graphs::cycle(4);
  CHECK(link(c4, 0) == VertexSet{1, 3});
  CHECK(link(graphs::edgeless(3), 1).empty());
  CHECK(link(graphs::complete(4), 2) == VertexSet{0, 1, 3});
  CHECK_THROWS_AS(link(c4, 4), InputError);

  CHECK(is_clique(graphs::complete(3), {0, 1, 2}));
  CHECK_FALSE(is_clique(c4, {0, 2}));
  CHECK(is_clique(c4, {}));
  CHECK(is_clique(c4, {3}));
}

TEST_CASE("induced cycle witnesses") {
  auto c4 = graphs::cycle(4);
  auto w  = has_induced_cycle_ge(c4, CycleLength::exactly_4);
  REQUIRE(w);
  CHECK(*w == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(has_induced_cycle_ge(c4, CycleLength::at_least_4) == w);

  auto c5 = graphs::cycle(5);
  CHECK_FALSE(has_induced_cycle_ge(c5, CycleLength::exactly_4));
  auto w5 = has_induced_cycle_ge(c5, CycleLength::at_least_4);
  REQUIRE(w5);
  CHECK(*w5 == std::vector<VertexId>{0, 1, 2, 3, 4});

  // a tree
  std::vector<std::pair<VertexId, VertexId>> tree{{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}};
  auto t = SimplicialGraph::from_edges(test::names(6), tree);
  CHECK_FALSE(has_induced_cycle_ge(t, CycleLength::exactly_4));
  CHECK_FALSE(has_induced_cycle_ge(t, CycleLength::at_least_4));
}

TEST_CASE("canonical cycle is the least rotation or reflection") {
  CHECK(canonical_cycle({2, 0, 3, 1}) == std::vector<VertexId>{0, 2, 1, 3});
  CHECK(canonical_cycle({3, 4, 0, 1, 2}) == std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(canonical_cycle({0, 4, 3, 2, 1}) == std::vector<VertexId>{0, 1, 2, 3, 4});
}

TEST_CASE("induced cycles agree with subset enumeration on all graphs with 5 vertices") {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    auto g = test::graph_from_mask(5, mask);
    for (bool four : {true, false}) {
      auto w = has_induced_cycle_ge(
          g, four ? CycleLength::exactly_4 : CycleLength::at_least_4);
      REQUIRE(w.has_value() == oracle_has_cycle(g, four));
      if (w) {
        CHECK(is_induced_cycle(g, *w));
        CHECK(canonical_cycle(*w) == *w);
        CHECK((four ? w->size() == 4 : w->size() >= 4));
      }
    }
    CHECK(is_chordal_lex_bfs(g) == !oracle_has_cycle(g, false));
    CHECK(is_chordal_brute_force(g) == !oracle_has_cycle(g, false));
  }
}

TEST_CASE("induced cycles agree with subset enumeration on sampled graphs with 6 to 8 vertices") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1500; ++trial) {
    std::size_t n = 6 + trial % 3;
    auto        g = test::random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    for (bool four : {true, false}) {
      auto w = has_induced_cycle_ge(
          g, four ? CycleLength::exactly_4 : CycleLength::at_least_4);
      REQUIRE(w.has_value() == oracle_has_cycle(g, four));
      if (w) {
        CHECK(is_induced_cycle(g, *w));
      }
    }
  }
}

TEST_CASE("both chordality algorithms agree up to 12 vertices and beyond") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t n = 4 + trial % 17;  // 4..20
    auto        g = test::random_graph(n, 0.15 + 0.05 * (trial % 10), rng);
    bool        lex = is_chordal_lex_bfs(g);
    CHECK(lex == is_chordal_brute_force(g));
    auto w = has_induced_cycle_ge(g, CycleLength::at_least_4);
    CHECK(w.has_value() == !lex);
    if (w) {
      CHECK(is_induced_cycle(g, *w));
    }
  }
  // chordal families: trees, complete graphs, and fans
  CHECK(is_chordal_lex_bfs(graphs::complete(15)));
  CHECK(is_chordal_lex_bfs(graphs::path(30)));
  CHECK_FALSE(is_chordal_lex_bfs(graphs::cycle(30)));
  auto w30 = has_induced_cycle_ge(graphs::cycle(30), CycleLength::at_least_4);
  REQUIRE(w30);
  CHECK(w30->size() == 30);
  CHECK_THROWS_AS(is_chordal_brute_force(graphs::path(25)), ResourceError);
}

TEST_CASE("lexicographic BFS visits every vertex once") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g     = test::random_graph(9, 0.4, rng);
    auto order = lex_bfs_order(g);
    std::sort(order.begin(), order.end());
    CHECK(order == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  }
}

TEST_CASE("chromatic colouring examples") {
  auto e = chromatic_coloring(graphs::edgeless(4));
  CHECK(e.num_colors == 1);
  CHECK(chromatic_coloring(graphs::cycle(5)).num_colors == 3);
  CHECK(chromatic_coloring(graphs::cycle(6)).num_colors == 2);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(chromatic_coloring(graphs::complete(n)).num_colors == n);
  }
  auto pg = petersen();
  auto pc = chromatic_coloring(pg);
  CHECK(pc.num_colors == 3);
  CHECK(is_proper(pg, pc));
  CHECK(chromatic_coloring(SimplicialGraph{}).num_colors == 0);
}

TEST_CASE("chromatic colouring is proper and optimal") {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    auto g = test::graph_from_mask(5, mask);
    auto c = chromatic_coloring(g);
    REQUIRE(is_proper(g, c));
    REQUIRE(c.num_colors == oracle_chromatic(g));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 6 + trial % 3;
    auto        g = test::random_graph(n, 0.3 + 0.1 * (trial % 5), rng);
    auto        c = chromatic_coloring(g);
    REQUIRE(is_proper(g, c));
    REQUIRE(c.num_colors == oracle_chromatic(g));
  }
}

TEST_CASE("is_proper rejects bad colourings") {
  auto c3 = graphs::cycle(3);
  CHECK_FALSE(is_proper(c3, Coloring{{0, 1, 1}, 2}));
  CHECK(is_proper(c3, Coloring{{0, 1, 2}, 3}));
  CHECK_FALSE(is_proper(c3, Coloring{{0, 1}, 2}));
}
