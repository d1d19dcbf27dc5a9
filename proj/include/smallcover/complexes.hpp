#pragma once

// Simple polytopes described through their dual simplicial complexes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace smallcover {

/// Subset of {0, ..., 63}. Complexes are limited to 64 vertices (facets).
class VertexSet {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<std::size_t> vertices);
  static VertexSet from_vector(const std::vector<std::size_t>& vertices);
  static VertexSet range(std::size_t first, std::size_t last);  // [first, last)

  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t v) const { return (mask_ >> v) & 1U; }
  bool contains(VertexSet other) const { return (mask_ & other.mask_) == other.mask_; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(mask_)); }
  bool empty() const { return mask_ == 0; }
  /// Largest element; undefined when empty.
  std::size_t max() const { return 63 - static_cast<std::size_t>(__builtin_clzll(mask_)); }

  VertexSet with(std::size_t v) const { return VertexSet(mask_ | (std::uint64_t{1} << v)); }
  VertexSet without(std::size_t v) const { return VertexSet(mask_ & ~(std::uint64_t{1} << v)); }

  std::vector<std::size_t> to_vector() const;
  /// "{0,2,5}"
  std::string to_string() const;

  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Lexicographic order on the sorted element lists ({0,1} < {0,3} < {1,2}).
bool lex_less(VertexSet a, VertexSet b);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal members of `simplices`. Throws InvalidInput
  /// if a vertex is out of range or never used.
  static SimplicialComplex from_simplices(std::size_t vertex_count, const std::vector<VertexSet>& simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Inclusion-maximal simplices in lexicographic order.
  const std::vector<VertexSet>& maximal_simplices() const { return maximal_; }

  bool is_face(VertexSet s) const;
  /// Every face, including the empty one.
  std::vector<VertexSet> faces() const;
  /// Inclusion-minimal non-faces (Stanley-Reisner generators), lexicographic order.
  std::vector<VertexSet> minimal_nonfaces() const;
  /// All maximal simplices have exactly `vertices` elements.
  bool is_pure(std::size_t vertices) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<VertexSet> maximal_;
};

struct ProductOfSimplices {
  std::vector<std::size_t> dims;
  friend bool operator==(const ProductOfSimplices&, const ProductOfSimplices&) = default;
};
struct GeneralPolytope {
  friend bool operator==(const GeneralPolytope&, const GeneralPolytope&) = default;
};
using PolytopeStructure = std::variant<ProductOfSimplices, GeneralPolytope>;

/// Combinatorial type of a simple n-polytope with r facets, given by its dual.
///
/// Facet indexing for a product of simplices (0-based): within factor j the
/// facets F_1^j .. F_{n_j}^j occupy N_{j-1} .. N_j - 1 and F_0^j sits at
/// n + j - 1, so facet i carries the indeterminate x_{i+1} and F_0^j carries
/// y_j = x_{n+j}.
class SimplePolytope {
 public:
  /// Throws InvalidInput unless every maximal simplex has n vertices.
  /// Sphericity of the dual is not checked.
  static SimplePolytope from_dual(std::size_t n, SimplicialComplex dual);

  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return dual_.vertex_count(); }
  const SimplicialComplex& dual() const { return dual_; }
  const PolytopeStructure& structure() const { return structure_; }
  bool is_product_of_simplices() const { return std::holds_alternative<ProductOfSimplices>(structure_); }
  /// Factor dimensions; throws InvalidInput for a general polytope.
  const std::vector<std::size_t>& factor_dims() const;

  /// dual().minimal_nonfaces(), computed once at construction.
  const std::vector<VertexSet>& minimal_nonfaces() const { return minimal_nonfaces_; }

  /// Number of vertices of P = number of maximal simplices of the dual.
  std::size_t vertex_count() const { return dual_.maximal_simplices().size(); }

  /// "F_k^j" for products, "F_i" (1-based) otherwise.
  std::string facet_label(std::size_t facet) const;

  friend bool operator==(const SimplePolytope&, const SimplePolytope&) = default;

 private:
  friend SimplePolytope product_of_simplices(const std::vector<std::size_t>& dims);

  std::size_t dim_ = 0;
  SimplicialComplex dual_;
  std::vector<VertexSet> minimal_nonfaces_;
  PolytopeStructure structure_ = GeneralPolytope{};
};

/// Delta^{n_1} x ... x Delta^{n_m}; throws InvalidInput on empty dims or n_j = 0.
SimplePolytope product_of_simplices(const std::vector<std::size_t>& dims);

/// Boundary of the simplex on n+1 vertices: the dual of Delta^n.
SimplicialComplex simplex_boundary(std::size_t n);

/// Equivariant LS-category of the real moment-angle complex: |maximal simplices|.
std::size_t equivariant_cat_rzk(const SimplicialComplex& k);

struct SphereProduct {
  std::vector<std::size_t> spheres;
  bool simply_connected = false;
};

/// Real moment-angle manifold of a product of simplices as a product of
/// spheres. Throws InvalidInput for general polytopes.
SphereProduct rz_product_spheres(const SimplePolytope& p);

}  // namespace smallcover
