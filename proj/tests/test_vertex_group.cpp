#include <doctest.h>

#include <algorithm>
#include <limits>

#include "gp/error.hpp"
#include "gp/vertex_group.hpp"

using namespace gp;

namespace {

  std::vector<VertexGroup> finite_fixtures() {
    return {VertexGroup::cyclic(2),
            VertexGroup::cyclic(3),
            VertexGroup::cyclic(5),
            VertexGroup::cyclic(12),
            symmetric_group_3()};
  }

  // Klein four-group as a table with the identity at index 2.
  VertexGroup klein_shifted() {
    // elements: a, b, e, c
    return VertexGroup::table({{2, 3, 0, 1}, {3, 2, 1, 0}, {0, 1, 2, 3}, {1, 0, 3, 2}},
                              {"a", "b", "e", "c"});
  }

}  // namespace

TEST_CASE("cyclic arithmetic") {
  auto z3 = VertexGroup::cyclic(3);
  CHECK(z3.multiply(2, 2) == 1);
  CHECK(z3.inverse(1) == 2);
  CHECK(z3.power(1, -1) == 2);
  CHECK(z3.power(2, 5) == 1);
  CHECK(z3.is_identity(0));
  CHECK_THROWS_AS(VertexGroup::cyclic(1), InputError);
  CHECK_THROWS_AS(VertexGroup::cyclic(0), InputError);
  CHECK_FALSE(z3.contains(3));
  CHECK(z3.describe() == "Z/3");
}

TEST_CASE("infinite cyclic arithmetic") {
  auto z = VertexGroup::infinite_cyclic();
  CHECK(z.is_identity(z.multiply(5, -5)));
  CHECK(z.multiply(5, 2) == 7);
  CHECK(z.geodesic_length(4) == 4);
  CHECK(z.geodesic_length(-6) == 6);
  CHECK(z.geodesic_length(0) == 0);
  CHECK(z.generators() == std::vector<Elem>{1, -1});
  CHECK_FALSE(z.is_finite());
  CHECK(z.is_hyperbolic());
  CHECK(z.order() == 0);
  CHECK_THROWS_AS(z.elements(), InputError);
  auto big = std::numeric_limits<Elem>::max();
  CHECK_THROWS_AS(z.multiply(big, 1), ResourceError);
  CHECK_THROWS_AS(z.power(big, 2), ResourceError);
}

TEST_CASE("table groups") {
  auto s3 = symmetric_group_3();
  auto t  = *s3.element_by_name("(01)");
  CHECK(s3.is_identity(s3.multiply(t, t)));
  auto r = *s3.element_by_name("(012)");
  CHECK(s3.multiply(r, r) == *s3.element_by_name("(021)"));
  // non-abelian
  CHECK(s3.multiply(t, r) != s3.multiply(r, t));
  CHECK(s3.order() == 6);
  CHECK(s3.generators().size() == 5);
  CHECK(s3.is_finite());
  CHECK(s3.is_hyperbolic());

  auto k = klein_shifted();
  CHECK(k.identity() == 2);
  CHECK(k.is_identity(2));
  CHECK(k.elements().front() == 2);
  CHECK(k.generators() == std::vector<Elem>{0, 1, 3});
  CHECK(k.geodesic_length(2) == 0);
  CHECK(k.geodesic_length(3) == 1);
}

TEST_CASE("table validation") {
  // not associative: a loop without associativity on 3 elements
  CHECK_THROWS_AS(VertexGroup::table({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}), InputError);
  // no identity
  CHECK_THROWS_AS(VertexGroup::table({{1, 1}, {1, 1}}), InputError);
  CHECK(VertexGroup::table({{1, 0}, {0, 1}}).identity() == 1);
  // identity but not inverses (a monoid)
  CHECK_THROWS_AS(VertexGroup::table({{0, 1}, {1, 1}}), InputError);
  // ragged and out of range
  CHECK_THROWS_AS(VertexGroup::table({{0, 1}, {1}}), InputError);
  CHECK_THROWS_AS(VertexGroup::table({{0, 1}, {1, 2}}), InputError);
  // trivial group
  CHECK_THROWS_AS(VertexGroup::table({{0}}), InputError);
  // name count mismatch
  CHECK_THROWS_AS(VertexGroup::table({{0, 1}, {1, 0}}, {"e"}), InputError);
  // too large
  std::vector<std::vector<std::int64_t>> big(513, std::vector<std::int64_t>(513));
  CHECK_THROWS_AS(VertexGroup::table(big), InputError);
}

TEST_CASE("geodesic length is zero exactly at the identity") {
  for (auto const& g : finite_fixtures()) {
    for (Elem a : g.elements()) {
      CHECK((g.geodesic_length(a) == 0) == g.is_identity(a));
      CHECK(g.geodesic_length(a) <= 1);
    }
  }
  auto five = VertexGroup::cyclic(5);
  CHECK(five.geodesic_length(3) == 1);
}

TEST_CASE("generators are symmetric and inverses cancel") {
  for (auto const& g : finite_fixtures()) {
    auto gens = g.generators();
    CHECK(gens.size() == static_cast<std::size_t>(g.order() - 1));
    for (Elem a : gens) {
      CHECK(std::find(gens.begin(), gens.end(), g.inverse(a)) != gens.end());
    }
    for (Elem a : g.elements()) {
      CHECK(g.is_identity(g.multiply(a, g.inverse(a))));
      CHECK(g.is_identity(g.multiply(g.inverse(a), a)));
    }
  }
  CHECK(VertexGroup::cyclic(2).generators() == std::vector<Elem>{1});
  CHECK(VertexGroup::cyclic(4).generators() == std::vector<Elem>{1, 2, 3});
}

TEST_CASE("opaque groups carry metadata only") {
  auto h = VertexGroup::opaque(false, true);
  CHECK_FALSE(h.is_finite());
  CHECK(h.is_hyperbolic());
  CHECK_FALSE(h.concrete());
  CHECK_THROWS_AS(h.multiply(0, 0), UnsupportedOperation);
  CHECK_THROWS_AS(h.geodesic_length(0), UnsupportedOperation);
  CHECK_THROWS_AS(h.generators(), UnsupportedOperation);

  auto bare = VertexGroup::opaque(std::nullopt, std::nullopt);
  CHECK_THROWS_AS(bare.is_hyperbolic(), MissingMetadata);
  CHECK_THROWS_AS(bare.is_finite(), MissingMetadata);
  CHECK_FALSE(VertexGroup::opaque(std::nullopt, false).is_hyperbolic());
}
