#include "smallcover/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "smallcover/errors.hpp"

namespace smallcover {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<std::size_t> vertices) {
  for (std::size_t v : vertices) {
    if (v >= kMaxVertices) throw InvalidInput("vertex index exceeds 63");
    mask_ |= std::uint64_t{1} << v;
  }
}

VertexSet VertexSet::from_vector(const std::vector<std::size_t>& vertices) {
  VertexSet s;
  for (std::size_t v : vertices) {
    if (v >= kMaxVertices) throw InvalidInput("vertex index exceeds 63");
    s = s.with(v);
  }
  return s;
}

VertexSet VertexSet::range(std::size_t first, std::size_t last) {
  VertexSet s;
  for (std::size_t v = first; v < last; ++v) s = s.with(v);
  return s;
}

std::vector<std::size_t> VertexSet::to_vector() const {
  std::vector<std::size_t> out;
  for (std::uint64_t bits = mask_; bits != 0; bits &= bits - 1) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(bits)));
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t v : to_vector()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count,
                                                    const std::vector<VertexSet>& simplices) {
  if (vertex_count > VertexSet::kMaxVertices) throw InvalidInput("at most 64 vertices are supported");
  const std::uint64_t all = vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;

  std::uint64_t used = 0;
  for (VertexSet s : simplices) {
    if ((s.mask() & ~all) != 0) throw InvalidInput("simplex " + s.to_string() + " uses a vertex out of range");
    used |= s.mask();
  }
  if (used != all) throw InvalidInput("every vertex must lie in some simplex");

  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < simplices.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool contains = simplices[j].contains(simplices[i]);
      // Duplicates: keep only the first occurrence.
      dominated = contains && (simplices[j] != simplices[i] || j < i);
    }
    if (!dominated) k.maximal_.push_back(simplices[i]);
  }
  std::sort(k.maximal_.begin(), k.maximal_.end(), lex_less);
  return k;
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [s](VertexSet m) { return m.contains(s); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out{VertexSet{}};
  // Grow faces by appending vertices larger than the current maximum.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const VertexSet f = out[i];
    const std::size_t start = f.empty() ? 0 : f.max() + 1;
    for (std::size_t v = start; v < vertex_count_; ++v) {
      const VertexSet g = f.with(v);
      if (is_face(g)) out.push_back(g);
    }
  }
  return out;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
  // A minimal non-face sigma is reached exactly once, from the face
  // sigma \ {max sigma}.
  std::vector<VertexSet> out;
  for (VertexSet f : faces()) {
    const std::size_t start = f.empty() ? 0 : f.max() + 1;
    for (std::size_t v = start; v < vertex_count_; ++v) {
      const VertexSet sigma = f.with(v);
      if (is_face(sigma)) continue;
      bool minimal = true;
      for (std::size_t u : f.to_vector()) {
        if (!is_face(sigma.without(u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(sigma);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool SimplicialComplex::is_pure(std::size_t vertices) const {
  return std::all_of(maximal_.begin(), maximal_.end(), [vertices](VertexSet m) { return m.size() == vertices; });
}

// ---------------------------------------------------------------------------
// SimplePolytope

SimplePolytope SimplePolytope::from_dual(std::size_t n, SimplicialComplex dual) {
  if (n == 0) throw InvalidInput("polytope dimension must be positive");
  if (dual.maximal_simplices().empty()) throw InvalidInput("dual complex has no simplices");
  for (VertexSet m : dual.maximal_simplices()) {
    if (m.size() != n) {
      throw InvalidInput("dual complex is not pure of dimension n-1: simplex " + m.to_string() + " has " +
                         std::to_string(m.size()) + " vertices, expected " + std::to_string(n));
    }
  }
  if (dual.vertex_count() < n + 1) throw InvalidInput("a simple n-polytope has at least n+1 facets");
  SimplePolytope p;
  p.dim_ = n;
  p.dual_ = std::move(dual);
  p.minimal_nonfaces_ = p.dual_.minimal_nonfaces();
  return p;
}

const std::vector<std::size_t>& SimplePolytope::factor_dims() const {
  const auto* prod = std::get_if<ProductOfSimplices>(&structure_);
  if (prod == nullptr) throw InvalidInput("polytope is not a product of simplices");
  return prod->dims;
}

std::string SimplePolytope::facet_label(std::size_t facet) const {
  if (const auto* prod = std::get_if<ProductOfSimplices>(&structure_)) {
    const std::size_t m = prod->dims.size();
    if (facet >= dim_) return "F_0^" + std::to_string(facet - dim_ + 1);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (facet < offset + prod->dims[j]) {
        return "F_" + std::to_string(facet - offset + 1) + "^" + std::to_string(j + 1);
      }
      offset += prod->dims[j];
    }
  }
  return "F_" + std::to_string(facet + 1);
}

SimplePolytope product_of_simplices(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw InvalidInput("product of simplices needs at least one factor");
  for (std::size_t d : dims) {
    if (d == 0) throw InvalidInput("simplex factors must have dimension >= 1");
  }
  const std::size_t m = dims.size();
  const std::size_t n = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  const std::size_t r = n + m;
  if (r > VertexSet::kMaxVertices) throw InvalidInput("at most 64 facets are supported");

  // Vertex v_{l_1..l_m} is the intersection of all facets except F_{l_j}^j.
  std::vector<VertexSet> simplices;
  std::vector<std::size_t> choice(m, 0);
  const VertexSet all = VertexSet::range(0, r);
  while (true) {
    VertexSet omitted;
    std::size_t offset = 0;
    for (std::size_t j = 0; j < m; ++j) {
      omitted = omitted.with(choice[j] == 0 ? n + j : offset + choice[j] - 1);
      offset += dims[j];
    }
    simplices.push_back(VertexSet(all.mask() & ~omitted.mask()));

    std::size_t j = 0;
    while (j < m && choice[j] == dims[j]) choice[j++] = 0;
    if (j == m) break;
    ++choice[j];
  }

  SimplePolytope p = SimplePolytope::from_dual(n, SimplicialComplex::from_simplices(r, simplices));
  p.structure_ = ProductOfSimplices{dims};
  return p;
}

SimplicialComplex simplex_boundary(std::size_t n) {
  std::vector<VertexSet> simplices;
  const VertexSet all = VertexSet::range(0, n + 1);
  for (std::size_t v = 0; v <= n; ++v) simplices.push_back(all.without(v));
  return SimplicialComplex::from_simplices(n + 1, simplices);
}

std::size_t equivariant_cat_rzk(const SimplicialComplex& k) { return k.maximal_simplices().size(); }

SphereProduct rz_product_spheres(const SimplePolytope& p) {
  const auto& dims = p.factor_dims();
  SphereProduct out;
  out.spheres = dims;
  out.simply_connected = std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d >= 2; });
  return out;
}

}  // namespace smallcover
