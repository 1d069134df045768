#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "gp/error.hpp"
#include "gp/surface.hpp"

using namespace gp;

namespace {

  bool cycle_adjacent(int n, int u, int v) {
    return (u + 1) % n == v || (v + 1) % n == u;
  }

  // Cell counts straight from the definition: every subset, every edge
  // S -> S+v, every square on S for cycle-adjacent u < v outside S.
  std::tuple<std::int64_t, std::int64_t, std::int64_t> counted_cells(int n) {
    std::int64_t vertices = 0, edges = 0, squares = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      ++vertices;
      for (int u = 0; u < n; ++u) {
        if ((s >> u) & 1U) {
          continue;
        }
        ++edges;
        for (int v = u + 1; v < n; ++v) {
          if (!((s >> v) & 1U) && cycle_adjacent(n, u, v)) {
            ++squares;
          }
        }
      }
    }
    return {vertices, edges, squares};
  }

  std::int64_t pow2(int k) {
    return std::int64_t{1} << k;
  }

  auto square_key(CubeSurfaceComplex::Square const& q) {
    return std::tuple(q.base, q.u, q.v);
  }

  auto edge_key(CubeSurfaceComplex::Edge const& e) {
    return std::pair(e.base, e.v);
  }

}  // namespace

TEST_CASE("cell counts") {
  auto c3 = build_Y(3);
  CHECK(c3.vertex_count == 8);
  CHECK(c3.edges.size() == 12);
  CHECK(c3.squares.size() == 6);
  auto c4 = build_Y(4);
  CHECK(c4.vertex_count == 16);
  CHECK(c4.edges.size() == 32);
  CHECK(c4.squares.size() == 16);
  auto c5 = build_Y(5);
  CHECK(c5.vertex_count == 32);
  CHECK(c5.edges.size() == 80);
  CHECK(c5.squares.size() == 40);

  for (int n = 3; n <= 16; ++n) {
    auto c           = build_Y(n);
    auto [v, e, f]   = counted_cells(n);
    CHECK(static_cast<std::int64_t>(c.vertex_count) == v);
    CHECK(static_cast<std::int64_t>(c.edges.size()) == e);
    CHECK(static_cast<std::int64_t>(c.squares.size()) == f);
    CHECK(v == pow2(n));
    CHECK(e == n * pow2(n - 1));
    CHECK(f == n * pow2(n - 2));
    CHECK(euler_characteristic(c) == (4 - n) * pow2(n - 2));
  }
}

TEST_CASE("euler characteristic and genus") {
  CHECK(euler_characteristic(build_Y(3)) == 2);
  CHECK(euler_characteristic(build_Y(4)) == 0);
  CHECK(euler_characteristic(build_Y(6)) == -32);
  CHECK(genus_from_complex(build_Y(3)) == 0);
  CHECK(genus_from_complex(build_Y(4)) == 1);
  CHECK(genus_from_complex(build_Y(5)) == 5);
  CHECK(genus_from_complex(build_Y(8)) == 129);  // 1 + 4 * 2^5
  for (int n = 3; n <= 14; ++n) {
    CHECK(genus_from_complex(build_Y(n)) == 1 + (n - 4) * pow2(n - 3));
  }
}

TEST_CASE("squares are bounded by edges of the complex") {
  for (int n = 3; n <= 10; ++n) {
    auto                                     c = build_Y(n);
    std::set<std::pair<std::uint32_t, int>> edges;
    for (auto e : c.edges) {
      CHECK(((e.base >> e.v) & 1U) == 0);
      CHECK(e.base < c.vertex_count);
      edges.insert(edge_key(e));
    }
    CHECK(edges.size() == c.edges.size());
    std::map<std::pair<std::uint32_t, int>, int> incidence;
    for (auto q : c.squares) {
      CHECK(q.u < q.v);
      CHECK(cycle_adjacent(n, q.u, q.v));
      std::uint32_t s = q.base, su = s | (1U << q.u), sv = s | (1U << q.v);
      std::pair<std::uint32_t, int> boundary[] = {{s, q.u}, {s, q.v}, {su, q.v}, {sv, q.u}};
      for (auto b : boundary) {
        CHECK(edges.count(b) == 1);
        ++incidence[b];
      }
    }
    // each edge direction has two neighbours on the cycle
    for (auto e : c.edges) {
      CHECK(incidence[edge_key(e)] == 2);
    }
  }
}

TEST_CASE("closed surface checks") {
  for (int n = 3; n <= 12; ++n) {
    auto c     = build_Y(n);
    auto check = verify_closed_surface(c);
    CHECK(check.closed_surface);
    CHECK(check.bad_edges.empty());
    CHECK(check.bad_vertices.empty());
    CHECK(orientability(c) == "pass");
  }
}

TEST_CASE("removing a square breaks the surface") {
  auto c       = build_Y(4);
  auto removed = c.squares[5];
  c.squares.erase(c.squares.begin() + 5);
  auto check = verify_closed_surface(c);
  CHECK_FALSE(check.closed_surface);
  std::uint32_t s  = removed.base;
  std::set<std::pair<std::uint32_t, int>> want{{s, removed.u},
                                               {s, removed.v},
                                               {s | (1U << removed.u), removed.v},
                                               {s | (1U << removed.v), removed.u}};
  std::set<std::pair<std::uint32_t, int>> got;
  for (auto e : check.bad_edges) {
    got.insert(edge_key(e));
  }
  CHECK(got == want);
  CHECK_FALSE(check.bad_vertices.empty());
  CHECK_THROWS_AS(genus_from_complex(c), PreconditionViolation);
}

TEST_CASE("a duplicated square is caught") {
  auto c = build_Y(5);
  c.squares.push_back(c.squares.front());
  CHECK_FALSE(verify_closed_surface(c).closed_surface);
}

TEST_CASE("the complex does not depend on the vertex group orders") {
  auto sorted = [](CubeSurfaceComplex c) {
    std::sort(c.edges.begin(), c.edges.end(),
              [](auto a, auto b) { return edge_key(a) < edge_key(b); });
    std::sort(c.squares.begin(), c.squares.end(),
              [](auto a, auto b) { return square_key(a) < square_key(b); });
    return c;
  };
  std::vector<std::vector<std::int64_t>> orders{
      {2, 2, 2}, {3, 5, 7}, {2, 2, 2, 2}, {2, 3, 4, 5}, {0, 0, 0, 0}, {2, 0, 3, 0, 6}, {4, 4, 4, 4, 4, 4}};
  for (auto const& k : orders) {
    auto a = sorted(build_Y_from_cayley(k));
    auto b = sorted(build_Y(static_cast<int>(k.size())));
    CHECK(a.n == b.n);
    CHECK(a.vertex_count == b.vertex_count);
    REQUIRE(a.edges.size() == b.edges.size());
    REQUIRE(a.squares.size() == b.squares.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      CHECK(edge_key(a.edges[i]) == edge_key(b.edges[i]));
    }
    for (std::size_t i = 0; i < a.squares.size(); ++i) {
      CHECK(square_key(a.squares[i]) == square_key(b.squares[i]));
    }
  }
}

TEST_CASE("surface errors") {
  CHECK_THROWS_AS(build_Y(2), InputError);
  CHECK_THROWS_AS(build_Y(21), InputError);
  CHECK_THROWS_AS(build_Y_from_cayley({2, 2}), InputError);
  CHECK_THROWS_AS(build_Y_from_cayley({2, 1, 2}), InputError);
}
