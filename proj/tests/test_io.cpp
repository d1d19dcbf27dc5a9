#include <doctest.h>

#include <fstream>
#include <sstream>

#include "smallcover/errors.hpp"
#include "smallcover/io.hpp"

using namespace smallcover;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(SMALLCOVER_TEST_DATA) + "/" + name);
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("documents round-trip through render_input") {
  for (const char* name : {"m3_101.json", "pentagon.json", "square_invalid.json", "bott_1_3.json"}) {
    const InputDocument d = parse_input(slurp(name));
    CHECK(parse_input(render_input(d)) == d);
  }
  const InputDocument d = parse_input(slurp("bott_1_3.json"));
  CHECK(d.lambda.kind == LambdaSpec::Kind::bott_lower);
  REQUIRE(d.lambda.lower_blocks.size() == 1);
  CHECK(d.lambda.lower_blocks[0].to_string() == "111");
  CHECK(d.options.strategy == std::optional<Strategy>{Strategy::linear});
}

TEST_CASE("lower blocks accept several spellings") {
  const std::string head =
      R"({"polytope": {"type": "product_of_simplices", "dims": [1, 1, 1]},
          "lambda": {"type": "bott", "dims": [1, 1, 1], "lower_blocks": )";
  const InputDocument a = parse_input(head + "[1, 0, 1]}}");
  const InputDocument b = parse_input(head + R"([[1], [0], [1]]}})");
  const InputDocument c = parse_input(head + R"("101"}})");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(resolve(a).bott->lower_bits() == "101");
}

TEST_CASE("resolve builds the polytope and lambda") {
  const ResolvedInput r = resolve(parse_input(slurp("pentagon.json")));
  CHECK(r.polytope.facet_count() == 5);
  CHECK_FALSE(r.bott.has_value());
  CHECK(r.lambda.vectors[4].to_string() == "11");
  const ResolvedInput m = resolve(parse_input(slurp("m3_101.json")));
  REQUIRE(m.bott.has_value());
  CHECK(m.lambda == bott_to_characteristic(*m.bott));
}

TEST_CASE("malformed documents are rejected with a reason") {
  try {
    parse_input("{\"polytope\": ");
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_input("[]"), InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"polytope": {"type": "product_of_simplices", "dims": [1]}})"), InvalidInput);
  // unknown fields are errors, not silently ignored
  CHECK_THROWS_AS(parse_input(R"({"polytope": {"type": "product_of_simplices", "dims": [1], "colour": 1},
                                  "lambda": {"type": "bott", "dims": [1], "lower_blocks": []}})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"polytope": {"type": "prism"},
                                  "lambda": {"type": "bott", "dims": [1], "lower_blocks": []}})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"polytope": {"type": "product_of_simplices", "dims": [1, 1]},
                                  "lambda": {"type": "bott", "dims": [1, 1], "lower_blocks": ["12"]}})"),
                  InvalidInput);
  // bott lambda on a polytope that is not the matching product
  CHECK_THROWS_AS(resolve(parse_input(R"({"polytope": {"type": "product_of_simplices", "dims": [1, 2]},
                                          "lambda": {"type": "bott", "dims": [2, 1], "lower_blocks": [[1, 1]]}})")),
                  InvalidInput);
  CHECK_THROWS_AS(resolve(parse_input(R"({"polytope": {"type": "product_of_simplices", "dims": [1, 1]},
                                          "lambda": {"type": "explicit", "n": 2, "vectors": [[1, 0]]}})")),
                  InvalidInput);
}

TEST_CASE("reports") {
  const ResolvedInput r = resolve(parse_input(slurp("m3_101.json")));
  const auto c = compute_cohomology(r.polytope, r.lambda);
  const Json j = cohomology_json(c, r.polytope, {true, std::nullopt});
  CHECK(j["dimensions"] == Json::parse("[1, 3, 3, 1]"));
  CHECK(j["relations"][1] == "y1y2 + y2^2");
  CHECK(j["basis"]["3"][0] == "y1y2y3");
  const Json t = cohomology_json(c, r.polytope, {false, 1});
  CHECK(t["dimensions"].size() == 2);
  const BoundsReport b = bounds_report(r.polytope, r.lambda, c.algebra, {}, ExternalValues::builtin());
  const Json bj = bounds_json(b);
  CHECK(bj["tc"]["lo"] == 6);
  CHECK(bj["tcs"]["exact"] == true);
  CHECK(bj["zcl"]["witness"] == "y1y2 (x) y1y2y3");
  const std::string text = render_text(bj);
  CHECK(text.find("witness: y1y2 (x) y1y2y3") != std::string::npos);
}

}  // TEST_SUITE
