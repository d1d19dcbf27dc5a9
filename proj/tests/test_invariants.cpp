#include <doctest.h>

#include "smallcover/errors.hpp"
#include "smallcover/invariants.hpp"

using namespace smallcover;

namespace {

SmallCoverCohomology bott(std::vector<std::size_t> dims, std::string_view bits) {
  const BottMatrix b = BottMatrix::from_lower_bits(dims, bits);
  return compute_cohomology(product_of_simplices(dims), bott_to_characteristic(b));
}

BoundsReport report(std::vector<std::size_t> dims, std::string_view bits, BoundsOptions opts = {}) {
  const BottMatrix b = BottMatrix::from_lower_bits(dims, bits);
  return bounds_report(product_of_simplices(dims), bott_to_characteristic(b), opts, ExternalValues::builtin());
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("r_of and in_S against direct definitions") {
  std::vector<std::vector<int>> pascal(70);
  for (std::size_t k = 0; k < pascal.size(); ++k) {
    pascal[k].assign(k + 1, 1);
    for (std::size_t i = 1; i < k; ++i) pascal[k][i] = (pascal[k - 1][i - 1] + pascal[k - 1][i]) % 2;
  }
  for (std::size_t n = 1; n < pascal.size(); ++n) {
    bool all_even = true;
    for (std::size_t i = 1; i < n; ++i) all_even = all_even && pascal[n][i] == 0;
    CHECK_MESSAGE(in_S(n) == all_even, "n = " << n);
    const std::size_t r = r_of(n);
    CHECK(n <= (std::size_t{1} << r) - 1);
    CHECK((std::size_t{1} << r) - 1 < 2 * n);
  }
  CHECK(in_S(1));
  CHECK(in_S(8));
  CHECK_FALSE(in_S(6));
}

TEST_CASE("zero-divisor cup-length of real projective spaces") {
  // zcl(RP^n) = 2^r - 1 with 2^{r-1} <= n < 2^r
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto c = compute_cohomology(product_of_simplices({n}), bott_to_characteristic(BottMatrix({n})));
    const TensorSquare ts(c.algebra);
    std::size_t r = 0;
    while ((std::size_t{1} << r) <= n) ++r;
    const ZclResult z = zcl_lower(ts, Strategy::generators);
    CHECK_MESSAGE(z.value == (std::size_t{1} << r) - 1, "n = " << n);
    CHECK(verify_certificate(ts, z.certificate));
  }
}

TEST_CASE("certificates verify and strategies are monotone") {
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {1, 2}, {2, 1}}) {
    const BottEnumerator e(dims);
    const SimplePolytope p = product_of_simplices(dims);
    for (std::uint64_t i = 0; i < e.count(); ++i) {
      const auto c = compute_cohomology(p, bott_to_characteristic(e.at(i)));
      const TensorSquare ts(c.algebra);
      const ZclResult g = zcl_lower(ts, Strategy::generators);
      const ZclResult l = zcl_lower(ts, Strategy::linear);
      const ZclResult f = zcl_lower(ts, Strategy::full);
      CHECK(verify_certificate(ts, g.certificate));
      CHECK(verify_certificate(ts, l.certificate));
      CHECK(verify_certificate(ts, f.certificate));
      CHECK(g.value <= l.value);
      CHECK(l.value <= f.value);
      // a nonzero product of k zero-divisors needs total degree >= k and <= 2n
      CHECK(f.value <= 2 * p.dim());
      CHECK(g.certificate.length == g.value);
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto c = bott({1, 1, 1}, "101");
  const TensorSquare ts(c.algebra);
  ZclResult z = zcl_lower(ts, Strategy::generators);
  CHECK(z.value == 5);
  CHECK(z.certificate.render() == "bar(y2)^2 * bar(y3)^3 != 0, witness y1y2 (x) y1y2y3");
  Certificate bad = z.certificate;
  bad.factors.back().exponent += 1;
  CHECK_FALSE(verify_certificate(ts, bad));
  Certificate wrong_witness = z.certificate;
  wrong_witness.witness = TensorTerm{0, 0};
  CHECK_FALSE(verify_certificate(ts, wrong_witness));
}

TEST_CASE("case classifier") {
  CHECK(tc_case_classifier(1, 3).cases == std::vector<int>{3});
  CHECK(tc_case_classifier(1, 3).bound == 8);
  CHECK(tc_case_classifier(1, 2).cases == std::vector<int>{1});
  CHECK(tc_case_classifier(1, 2).bound == 5);
  CHECK(tc_case_classifier(2, 2).cases == std::vector<int>{2});
  CHECK(tc_case_classifier(2, 2).bound == 8);
  CHECK(tc_case_classifier(3, 3).bound == 0);
}

TEST_CASE("products of projective spaces") {
  const ExternalValues ext = ExternalValues::builtin();
  CHECK(rp_product_tc({1, 3}, ext).tc == Interval{5, 5});
  CHECK(rp_product_tc({2, 4}, ext).tc == Interval{11, 11});
  CHECK(rp_product_tc({1}, ext).tc == Interval{2, 2});
  const BoundsReport t = report({1, 3}, "000");
  CHECK(t.projective_product);
  CHECK(t.tc == Interval{5, 5});
  CHECK(t.tcd == Interval{5, 5});
  CHECK(report({1}, "").tcs == Interval{3, 3});
}

TEST_CASE("bounds for three-dimensional bott manifolds") {
  const BoundsReport a = report({1, 1, 1}, "100");
  CHECK(a.zcl.value == 4);
  CHECK(a.tc == Interval{5, 7});
  CHECK(a.cat == 4);
  CHECK(a.cat_equivariant == 8);
  const BoundsReport b = report({1, 1, 1}, "101");
  CHECK(b.tc == Interval{6, 7});
  CHECK(b.tcs == Interval{7, 7});
  CHECK(b.cat1 == std::optional<std::size_t>{4});
  BoundsOptions starved;
  starved.caps.budget = 1;
  CHECK(report({1, 1, 1}, "101", starved).budget_exhausted);
  CHECK(parse_strategy("linear") == Strategy::linear);
  CHECK(strategy_name(Strategy::full) == "full");
  CHECK_THROWS_AS(parse_strategy("greedy"), InvalidInput);
}

}  // TEST_SUITE

TEST_SUITE("invariants") {

// Over Delta^1 x Delta^3 the case-3 bound of 8 needs zcl >= 7. For lower
// blocks 011, 101, 110 the relation collapses to y2^4 = 0 (mod y1^2), which
// is the ring of RP^1 x RP^3; there TC = 5, so no Z_2 certificate can exceed
// 4. These are the three violations the two-factor sweep reports.
TEST_CASE("two-factor counterexamples have the cohomology of RP^1 x RP^3") {
  const auto proj = bott({1, 3}, "000");
  for (const char* bits : {"011", "101", "110"}) {
    const auto c = bott({1, 3}, bits);
    REQUIRE(c.algebra.dims() == proj.algebra.dims());
    for (std::size_t d = 0; d <= 4; ++d) CHECK(c.algebra.basis(d) == proj.algebra.basis(d));
    // identical structure constants on the shared monomial basis
    for (std::size_t d1 = 0; d1 <= 4; ++d1)
      for (std::size_t d2 = 0; d1 + d2 <= 4; ++d2)
        for (std::size_t i = 0; i < c.algebra.dim(d1); ++i)
          for (std::size_t j = 0; j < c.algebra.dim(d2); ++j) {
            const auto x = c.algebra.basis_product(d1, i, d2, j);
            const auto y = proj.algebra.basis_product(d1, i, d2, j);
            CHECK(std::vector<Word>(x.begin(), x.end()) == std::vector<Word>(y.begin(), y.end()));
          }
    const TensorSquare ts(c.algebra);
    CHECK(zcl_lower(ts, Strategy::full).value == 4);
    CHECK(tc_case_classifier(1, 3).bound == 8);
  }
  CHECK(rp_product_tc({1, 3}, ExternalValues::builtin()).tc == Interval{5, 5});
  // with every entry of the block set the bound is met
  const auto full = bott({1, 3}, "111");
  CHECK(zcl_lower(TensorSquare(full.algebra), Strategy::generators).value == 7);
}

}  // TEST_SUITE
