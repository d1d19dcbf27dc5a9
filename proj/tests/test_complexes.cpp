#include <doctest.h>

#include <random>

#include "smallcover/complexes.hpp"
#include "smallcover/errors.hpp"

using namespace smallcover;

namespace {

// Non-faces all of whose one-smaller subsets are faces.
std::vector<VertexSet> brute_minimal_nonfaces(const SimplicialComplex& k) {
  std::vector<VertexSet> out;
  const std::uint64_t all = std::uint64_t{1} << k.vertex_count();
  for (std::uint64_t m = 1; m < all; ++m) {
    const VertexSet s(m);
    if (k.is_face(s)) continue;
    bool minimal = true;
    for (std::size_t v : s.to_vector()) minimal = minimal && k.is_face(s.without(v));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

SimplicialComplex pentagon_dual() {
  return SimplicialComplex::from_simplices(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

}  // namespace

TEST_SUITE("complexes") {

TEST_CASE("vertex sets") {
  const VertexSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.max() == 5);
  CHECK(s.to_string() == "{0,2,5}");
  CHECK(s.contains(VertexSet{0, 5}));
  CHECK_FALSE(s.contains(VertexSet{1}));
  CHECK(VertexSet::range(1, 4) == VertexSet{1, 2, 3});
  CHECK(lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
  CHECK(lex_less(VertexSet{0, 1}, VertexSet{0, 3}));
}

TEST_CASE("square and cube") {
  const SimplePolytope sq = product_of_simplices({1, 1});
  CHECK(sq.dim() == 2);
  CHECK(sq.facet_count() == 4);
  CHECK(sq.vertex_count() == 4);
  // opposite facets F_1^j and F_0^j never meet
  CHECK(sq.minimal_nonfaces() == std::vector<VertexSet>{{0, 2}, {1, 3}});
  CHECK(sq.facet_label(0) == "F_1^1");
  CHECK(sq.facet_label(3) == "F_0^2");
  const SimplePolytope cube = product_of_simplices({1, 1, 1});
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.minimal_nonfaces().size() == 3);
  CHECK(cube.dual().is_pure(3));
}

TEST_CASE("products of simplices") {
  const SimplePolytope p = product_of_simplices({2, 3});
  CHECK(p.dim() == 5);
  CHECK(p.facet_count() == 7);
  CHECK(p.vertex_count() == 12);
  // one non-face per factor: all of that factor's facets
  CHECK(p.minimal_nonfaces() == std::vector<VertexSet>{{0, 1, 5}, {2, 3, 4, 6}});
  CHECK(p.facet_label(1) == "F_2^1");
  CHECK(p.facet_label(5) == "F_0^1");
  CHECK(p.factor_dims() == std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(product_of_simplices({}), InvalidInput);
  CHECK_THROWS_AS(product_of_simplices({2, 0}), InvalidInput);
}

TEST_CASE("minimal non-faces agree with brute force") {
  CHECK(pentagon_dual().minimal_nonfaces() == brute_minimal_nonfaces(pentagon_dual()));
  CHECK(pentagon_dual().minimal_nonfaces().size() == 5);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1}, {3}, {1, 2}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}}) {
    const SimplePolytope p = product_of_simplices(dims);
    CHECK(p.minimal_nonfaces() == brute_minimal_nonfaces(p.dual()));
  }
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t v = 4 + rng() % 5;
    std::vector<VertexSet> simplices;
    for (std::size_t i = 0; i < v; ++i) simplices.push_back(VertexSet{i});
    for (int k = 0; k < 6; ++k) simplices.push_back(VertexSet(rng() & ((std::uint64_t{1} << v) - 1)));
    const auto c = SimplicialComplex::from_simplices(v, simplices);
    CHECK(c.minimal_nonfaces() == brute_minimal_nonfaces(c));
  }
}

TEST_CASE("faces and maximal simplices") {
  const auto c = SimplicialComplex::from_simplices(3, {{0}, {0, 1}, {1, 2}, {2}});
  CHECK(c.maximal_simplices() == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(c.faces().size() == 6);  // empty, 3 vertices, 2 edges
  CHECK(simplex_boundary(2).maximal_simplices().size() == 3);
  CHECK(simplex_boundary(3).minimal_nonfaces() == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK_THROWS_AS(SimplicialComplex::from_simplices(3, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex::from_simplices(2, {{0, 4}}), InvalidInput);
  CHECK_THROWS_AS(SimplePolytope::from_dual(3, pentagon_dual()), InvalidInput);
  CHECK_FALSE(SimplePolytope::from_dual(2, pentagon_dual()).is_product_of_simplices());
}

TEST_CASE("real moment-angle complexes") {
  CHECK(equivariant_cat_rzk(pentagon_dual()) == 5);
  CHECK(equivariant_cat_rzk(product_of_simplices({1, 1, 1}).dual()) == 8);
  const SphereProduct sp = rz_product_spheres(product_of_simplices({2, 3}));
  CHECK(sp.spheres == std::vector<std::size_t>{2, 3});
  CHECK(sp.simply_connected);
  CHECK_FALSE(rz_product_spheres(product_of_simplices({1, 3})).simply_connected);
  CHECK_THROWS_AS(rz_product_spheres(SimplePolytope::from_dual(2, pentagon_dual())), InvalidInput);
}

}  // TEST_SUITE
