#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "smallcover/errors.hpp"
#include "smallcover/tensor.hpp"

using namespace smallcover;

namespace {

using Pair = std::pair<std::size_t, std::size_t>;
using Naive = std::set<Pair>;  // sum of b_k (x) b_l over Z_2

void toggle(Naive& s, Pair p) {
  if (!s.erase(p)) s.insert(p);
}

std::vector<std::size_t> global_support(const GradedF2Algebra& a, const CohomologyClass& c) {
  std::vector<std::size_t> out;
  for (std::size_t i : c.coords.support()) out.push_back(a.global_index(c.degree, i));
  return out;
}

CohomologyClass global_class(const GradedF2Algebra& a, std::size_t g) {
  const std::size_t d = a.degree_of_global(g);
  return a.basis_class(d, g - a.global_index(d, 0));
}

// (a (x) b)(c (x) d) = ac (x) bd, all in the algebra's own multiplication.
Naive naive_multiply(const GradedF2Algebra& a, const Naive& s, const Naive& t) {
  Naive out;
  for (auto [k1, l1] : s)
    for (auto [k2, l2] : t) {
      const auto left = a.multiply(global_class(a, k1), global_class(a, k2));
      const auto right = a.multiply(global_class(a, l1), global_class(a, l2));
      if (left.coords.empty() || right.coords.empty()) continue;
      for (std::size_t x : global_support(a, left))
        for (std::size_t y : global_support(a, right)) toggle(out, {x, y});
    }
  return out;
}

Naive naive_bar(const GradedF2Algebra& a, const CohomologyClass& u) {
  Naive out;
  for (std::size_t g : global_support(a, u)) {
    toggle(out, {0, g});
    toggle(out, {g, 0});
  }
  return out;
}

Naive as_naive(const TensorSquare& ts, const TensorClass& t) {
  Naive out;
  for (const auto& term : ts.terms(t)) out.insert({term.left, term.right});
  return out;
}

SmallCoverCohomology bott(std::vector<std::size_t> dims, std::string_view bits) {
  const BottMatrix b = BottMatrix::from_lower_bits(dims, bits);
  return compute_cohomology(product_of_simplices(dims), bott_to_characteristic(b));
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("powers of bar(y) on real projective spaces follow binomial parity") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto c = compute_cohomology(product_of_simplices({n}), bott_to_characteristic(BottMatrix({n})));
    const TensorSquare ts(c.algebra);
    const TensorClass b = ts.bar(c.algebra.variable(0));
    // Pascal's triangle mod 2
    std::vector<std::vector<int>> pascal(2 * n + 2);
    for (std::size_t k = 0; k < pascal.size(); ++k) {
      pascal[k].assign(k + 1, 1);
      for (std::size_t i = 1; i < k; ++i) pascal[k][i] = (pascal[k - 1][i - 1] + pascal[k - 1][i]) % 2;
    }
    TensorClass p = ts.one();
    for (std::size_t k = 1; k <= 2 * n + 1; ++k) {
      p = ts.multiply(p, b);
      Naive expected;
      for (std::size_t i = 0; i <= k; ++i)
        if (pascal[k][i] && i <= n && k - i <= n) expected.insert({i, k - i});
      CHECK(as_naive(ts, p) == expected);
    }
  }
}

TEST_CASE("real projective plane") {
  const auto c = compute_cohomology(product_of_simplices({2}), bott_to_characteristic(BottMatrix({2})));
  const TensorSquare ts(c.algebra);
  CHECK(ts.dimension() == 3);
  CHECK(ts.total_degree_dims() == std::vector<std::size_t>{1, 2, 3, 2, 1});
  const TensorClass b = ts.bar(c.algebra.variable(0));
  const TensorClass b3 = ts.multiply(ts.multiply(b, b), b);
  CHECK(ts.to_string(b3) == "y1 (x) y1^2 + y1^2 (x) y1");
  CHECK(ts.multiply(b3, b).is_zero());
  CHECK(ts.mu(b).is_zero());
  CHECK_THROWS_AS(ts.bar(c.algebra.one()), InvalidInput);
}

TEST_CASE("tensor multiplication agrees with the naive pure-tensor expansion") {
  std::mt19937_64 rng(31);
  for (const auto& [dims, bits] : std::vector<std::pair<std::vector<std::size_t>, std::string>>{
           {{1, 1, 1}, "100"}, {{1, 1, 1}, "101"}, {{1, 2}, "11"}, {{1, 1, 1, 1}, "110110"}}) {
    const auto c = bott(dims, bits);
    const auto& a = c.algebra;
    const TensorSquare ts(a);
    for (int t = 0; t < 15; ++t) {
      CohomologyClass u = a.zero(1);
      for (std::size_t i = 0; i < a.dim(1); ++i)
        if (rng() & 1U) u.coords.flip(i);
      if (u.is_zero()) u = a.variable(0);
      TensorClass prod = ts.one();
      Naive naive{{0, 0}};
      for (int k = 0; k < 4; ++k) {
        prod = ts.multiply_bar(prod, u);
        naive = naive_multiply(a, naive, naive_bar(a, u));
        CHECK(as_naive(ts, prod) == naive);
        CHECK(ts.multiply(prod, ts.one()) == prod);
      }
      const CohomologyClass x = a.basis_class(1, rng() % a.dim(1));
      const CohomologyClass y = a.basis_class(2, rng() % a.dim(2));
      const TensorClass px = ts.pure(x, y);
      CHECK(as_naive(ts, ts.multiply(px, ts.bar(u))) == naive_multiply(a, as_naive(ts, px), naive_bar(a, u)));
      CHECK(ts.multiply_bar(px, u) == ts.multiply(px, ts.bar(u)));
      // mu(x (x) y) = xy
      const auto xy = a.multiply(x, y);
      F2Vector g(a.total_dim());
      for (std::size_t i : global_support(a, xy)) g.set(i);
      CHECK(ts.mu(px) == g);
      CHECK(ts.mu(ts.bar(u)).is_zero());
    }
  }
}

}  // TEST_SUITE
