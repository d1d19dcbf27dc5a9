#include <doctest.h>

#include <random>

#include "smallcover/cohomology.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/reference.hpp"

using namespace smallcover;

namespace {

SmallCoverCohomology bott(std::vector<std::size_t> dims, std::string_view bits) {
  const BottMatrix b = BottMatrix::from_lower_bits(dims, bits);
  return compute_cohomology(product_of_simplices(dims), bott_to_characteristic(b));
}

std::string relations(const SmallCoverCohomology& c) {
  std::string s;
  for (const auto& g : c.reduced.generators) s += (s.empty() ? "" : "; ") + g.to_string(c.reduced.names);
  return s;
}

reference::ReferenceInput reference_input(const SimplePolytope& p, const CharacteristicFunction& l) {
  reference::ReferenceInput in;
  in.n = p.dim();
  in.facets = p.facet_count();
  for (VertexSet s : p.dual().maximal_simplices()) {
    std::vector<int> v;
    for (std::size_t f : s.to_vector()) v.push_back(static_cast<int>(f));
    in.maximal_simplices.push_back(v);
  }
  for (const auto& vec : l.vectors) {
    std::vector<int> v;
    for (std::size_t i = 0; i < vec.size(); ++i) v.push_back(vec.get(i) ? 1 : 0);
    in.lambda.push_back(v);
  }
  return in;
}

SimplePolytope pentagon() {
  return SimplePolytope::from_dual(
      2, SimplicialComplex::from_simplices(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
}

CohomologyClass random_class(const GradedF2Algebra& a, std::size_t d, std::mt19937_64& rng) {
  CohomologyClass c = a.zero(d);
  for (std::size_t i = 0; i < a.dim(d); ++i)
    if (rng() & 1U) c.coords.flip(i);
  return c;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("monomials and polynomials") {
  const auto m = monomials_of_degree(3, 2);
  CHECK(m.size() == 6);
  for (std::size_t i = 1; i < m.size(); ++i) CHECK(grlex_less(m[i - 1], m[i]));
  const std::vector<std::string> names{"y1", "y2", "y3"};
  CHECK(m.back().to_string(names) == "y1^2");
  CHECK(m.front().to_string(names) == "y3^2");
  CHECK(monomials_of_degree(4, 5).size() == 56);
  const Polynomial a = Polynomial::linear(F2Vector::parse("110"));
  CHECK(a.to_string(names) == "y1 + y2");
  CHECK((a * a).to_string(names) == "y1^2 + y2^2");
  CHECK((a + a).is_zero());
  CHECK(Monomial::variable(3, 1).divides(Monomial({1, 2, 0})));
}

TEST_CASE("real projective spaces") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto c = compute_cohomology(product_of_simplices({n}), bott_to_characteristic(BottMatrix({n})));
    const auto& a = c.algebra;
    CHECK(a.top_degree() == n);
    CHECK(a.dims() == std::vector<std::size_t>(n + 1, 1));
    std::vector<std::uint16_t> e{static_cast<std::uint16_t>(n)};
    CHECK(a.reduce(Monomial(e)).to_string() == "1");
    e[0] = static_cast<std::uint16_t>(n + 1);
    CHECK(a.reduce(Monomial(e)).empty());
  }
}

TEST_CASE("klein bottle and torus") {
  const auto k = bott({1, 1}, "1");
  CHECK(k.algebra.dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(relations(k) == "y1^2; y1y2 + y2^2");
  const auto t = bott({1, 1}, "0");
  CHECK(relations(t) == "y1^2; y2^2");
  // y2^2 = y1y2 != 0 on the Klein bottle, 0 on the torus
  const auto y2 = k.algebra.variable(1);
  CHECK_FALSE(k.algebra.multiply(y2, y2).is_zero());
  CHECK(t.algebra.multiply(t.algebra.variable(1), t.algebra.variable(1)).is_zero());
}

TEST_CASE("three-dimensional bott manifold presentation") {
  const auto c = bott({1, 1, 1}, "100");
  CHECK(relations(c) == "y1^2; y1y2 + y2^2; y3^2");
  CHECK(c.algebra.dims() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(c.reduced.facet_class(0).to_string(c.reduced.names) == "y1");
  CHECK(c.reduced.facet_class(1).to_string(c.reduced.names) == "y1 + y2");
  CHECK(c.reduced.facet_class(2).to_string(c.reduced.names) == "y3");
  CHECK(c.reduced.survivors == std::vector<std::size_t>{3, 4, 5});
  CHECK(c.presentation.monomial_ideal.size() == 3);
}

TEST_CASE("graded dimensions agree with the brute-force reducer") {
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {1, 2}, {2, 1}, {1, 1, 2}, {2, 2}}) {
    const SimplePolytope p = product_of_simplices(dims);
    const BottEnumerator e(dims);
    for (std::uint64_t i = 0; i < e.count(); ++i) {
      const CharacteristicFunction l = bott_to_characteristic(e.at(i));
      const auto c = compute_cohomology(p, l);
      CHECK(reference::reference_dimensions(reference_input(p, l), p.dim() + 1) ==
            [&] { auto d = c.algebra.dims(); d.push_back(0); return d; }());
    }
  }
  // all characteristic functions on the pentagon up to GL(2)
  const SimplePolytope pent = pentagon();
  const std::vector<F2Vector> nonzero{F2Vector::parse("10"), F2Vector::parse("01"), F2Vector::parse("11")};
  std::size_t checked = 0;
  for (int code = 0; code < 243; ++code) {
    CharacteristicFunction l{2, {}};
    for (int f = 0, x = code; f < 5; ++f, x /= 3) l.vectors.push_back(nonzero[x % 3]);
    if (!validate_characteristic(pent, l).valid) continue;
    const auto c = compute_cohomology(pent, l);
    CHECK(c.algebra.dims() == std::vector<std::size_t>{1, 3, 1});
    CHECK(reference::reference_dimensions(reference_input(pent, l), 3) == std::vector<std::size_t>{1, 3, 1, 0});
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("poincare duality and vertex count") {
  const BottEnumerator e({1, 1, 2});
  const SimplePolytope p = product_of_simplices({1, 1, 2});
  for (std::uint64_t i = 0; i < e.count(); ++i) {
    const auto c = compute_cohomology(p, bott_to_characteristic(e.at(i)));
    const FundamentalReport f = fundamental_checks(c.algebra, p);
    CHECK(f.ok());
    CHECK(f.total_dim == 12);
  }
}

TEST_CASE("multiplication is commutative, associative and matches polynomial reduction") {
  std::mt19937_64 rng(23);
  for (const auto& bits : {"101001", "111111", "010110"}) {
    const auto c = bott({1, 1, 1, 1}, bits);
    const auto& a = c.algebra;
    for (int t = 0; t < 40; ++t) {
      const std::size_t d1 = rng() % 3, d2 = rng() % 2, d3 = rng() % 2;
      const auto x = random_class(a, d1, rng), y = random_class(a, d2, rng), z = random_class(a, d3, rng);
      CHECK(a.multiply(x, y) == a.multiply(y, x));
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
      const auto p = a.to_polynomial(x) * a.to_polynomial(y);
      if (!p.is_zero()) CHECK(a.reduce(p) == a.multiply(x, y));
      if (!x.is_zero()) CHECK(a.reduce(a.to_polynomial(x)) == x);
    }
  }
}

TEST_CASE("errors and budgets") {
  const SimplePolytope sq = product_of_simplices({1, 1});
  CharacteristicFunction bad{2, std::vector<F2Vector>(4, F2Vector::parse("10"))};
  CHECK_THROWS_AS(build_presentation(sq, bad), InvalidInput);
  AlgebraLimits tiny;
  tiny.max_monomials_per_degree = 2;
  CHECK_THROWS_AS(compute_cohomology(product_of_simplices({1, 1, 1}),
                                     bott_to_characteristic(BottMatrix({1, 1, 1})), tiny),
                  BudgetExceeded);
  const auto a = bott({1, 1}, "1");
  const auto b = bott({1, 1}, "1");
  CHECK_THROWS_AS(cup(a.algebra, a.algebra.variable(0), b.algebra.variable(0)), InvalidInput);
}

}  // TEST_SUITE
