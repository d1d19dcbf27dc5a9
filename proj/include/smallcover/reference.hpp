#pragma once

// Brute-force oracle for the graded dimensions of a small cover's Z_2
// cohomology. Works directly in the facet variables x_1..x_r with the full
// ideal (minimal non-faces plus the lambda rows), enumerates every monomial
// of each degree and row-reduces the whole span densely. Shares no code with
// the main library on purpose.

#include <cstddef>
#include <vector>

namespace smallcover::reference {

struct ReferenceInput {
  std::size_t n = 0;                                // dimension
  std::size_t facets = 0;                           // r
  std::vector<std::vector<int>> maximal_simplices;  // facet indices
  std::vector<std::vector<int>> lambda;             // r vectors of length n, entries 0/1
};

/// dim of degree d of Z_2[x]/(I + J) for d = 0..max_degree.
/// Throws std::invalid_argument on malformed input or if r > 16.
std::vector<std::size_t> reference_dimensions(const ReferenceInput& in, std::size_t max_degree);

}  // namespace smallcover::reference
