#pragma once

// Input documents (JSON) and report rendering.
//
// Input shape:
//   {"polytope": {"type": "product_of_simplices", "dims": [1, 1, 1]}
//              | {"type": "dual_complex", "n": 2, "facets": 5,
//                 "maximal_simplices": [[0, 1], ...]},
//    "lambda":   {"type": "bott", "dims": [1, 1, 1], "lower_blocks": [1, 0, 0]}
//              | {"type": "bott", "dims": [...], "blocks": [[[1], [0]], ...]}
//              | {"type": "explicit", "n": 2, "vectors": [[1, 0], ...]},
//    "options":  {"strategy": "generators", "exponent_cap": 6, "budget": 100000,
//                 "assert_rz_simply_connected": false}}
//
// lower_blocks entries are blocks in the order (2,1), (3,1), (3,2), ...; a
// block of length 1 may be written as a bare 0/1, longer ones as lists or
// bit strings ("011").

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "smallcover/charfun.hpp"
#include "smallcover/cohomology.hpp"
#include "smallcover/complexes.hpp"
#include "smallcover/invariants.hpp"

namespace smallcover {

using Json = nlohmann::ordered_json;

struct PolytopeSpec {
  enum class Kind { product_of_simplices, dual_complex };
  Kind kind = Kind::product_of_simplices;
  std::vector<std::size_t> dims;                             // product
  std::size_t n = 0;                                         // dual
  std::size_t facets = 0;                                    // dual
  std::vector<std::vector<std::size_t>> maximal_simplices;  // dual

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

struct LambdaSpec {
  enum class Kind { bott_lower, bott_blocks, explicit_vectors };
  Kind kind = Kind::bott_lower;
  std::vector<std::size_t> dims;                 // bott
  std::vector<F2Vector> lower_blocks;            // bott_lower
  std::vector<std::vector<F2Vector>> blocks;     // bott_blocks, [k][j]
  std::size_t n = 0;                             // explicit
  std::vector<F2Vector> vectors;                 // explicit

  friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;
};

struct InputOptions {
  std::optional<Strategy> strategy;
  std::optional<std::size_t> exponent_cap;
  std::optional<std::uint64_t> budget;
  bool assert_rz_simply_connected = false;

  friend bool operator==(const InputOptions&, const InputOptions&) = default;
};

struct InputDocument {
  PolytopeSpec polytope;
  LambdaSpec lambda;
  InputOptions options;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws InvalidInput; JSON syntax errors carry the parser's position.
InputDocument parse_input(std::string_view text);
InputDocument input_from_json(const Json& j);
Json input_to_json(const InputDocument& doc);
/// Pretty JSON; parse_input(render_input(d)) == d.
std::string render_input(const InputDocument& doc);

struct ResolvedInput {
  SimplePolytope polytope;
  CharacteristicFunction lambda;
  std::optional<BottMatrix> bott;  // as given, for bott documents
};

/// Builds P and lambda. Throws InvalidInput on inconsistent shapes (bott
/// lambda over a non-product, dims mismatch, wrong lengths). Does not check
/// the characteristic condition.
ResolvedInput resolve(const InputDocument& doc);

struct CohomologyReportOptions {
  bool print_basis = false;
  std::optional<std::size_t> max_degree;  // truncate per-degree output
};

Json cohomology_json(const SmallCoverCohomology& c, const SimplePolytope& p, const CohomologyReportOptions& opts);
Json bounds_json(const BoundsReport& r);

/// Generic indented "key: value" rendering used for --format text.
std::string render_text(const Json& j);

}  // namespace smallcover
