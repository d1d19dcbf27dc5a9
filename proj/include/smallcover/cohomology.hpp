#pragma once

// Z_2-cohomology of a small cover: the face-ring presentation, elimination of
// the linear relations, and a degree-by-degree normal form for the quotient.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smallcover/charfun.hpp"
#include "smallcover/complexes.hpp"
#include "smallcover/f2linalg.hpp"

namespace smallcover {

namespace detail {
class MonomialIndex;
}

/// Exponent vector. Ordering helpers use graded lex with y1 > y2 > ... .
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t vars) : exps_(vars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t vars, std::size_t i);

  std::size_t vars() const { return exps_.size(); }
  std::size_t degree() const;
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  /// "1", "y1y2^2" with the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint16_t> exps_;
};

/// a < b in graded lex (y1 > y2 > ...).
bool grlex_less(const Monomial& a, const Monomial& b);

/// All monomials of the given degree, ascending in graded lex.
std::vector<Monomial> monomials_of_degree(std::size_t vars, std::size_t degree);

/// Sum of distinct monomials over Z_2, stored descending in graded lex.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Monomial m);
  static Polynomial linear(const F2Vector& coeffs);  // sum of y_i over the support

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous polynomial (0 for the zero polynomial).
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  Polynomial operator*(const Polynomial& other) const;

  /// "y1y2 + y2^2", "0".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m);
  std::vector<Monomial> terms_;
};

/// Z_2[v_1..v_r] / (I + J): I from the minimal non-faces, J from the rows of
/// the lambda matrix.
struct DJPresentation {
  std::size_t n = 0;
  std::size_t r = 0;
  SimplicialComplex dual;
  std::vector<VertexSet> monomial_ideal;  // square-free generators as facet sets
  F2Matrix linear_forms;                  // n x r
};

/// Throws InvalidInput (with the witness simplex) if lambda is not valid on P.
DJPresentation build_presentation(const SimplePolytope& p, const CharacteristicFunction& lambda);

struct ReducedPresentation {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::size_t> eliminated;  // facet indices, ascending
  std::vector<std::size_t> survivors;   // facet indices, ascending; survivor j is y_{j+1}
  /// Row i: facet variable v_i as a linear form in the survivors.
  F2Matrix substitution;  // r x (r - n)
  std::vector<Polynomial> generators;
  std::vector<std::string> names;  // "y1", "y2", ...

  std::size_t vars() const { return survivors.size(); }
  /// v_i as a polynomial in the survivors.
  Polynomial facet_class(std::size_t facet) const;
};

/// Eliminates the lexicographically first maximal simplex of the dual whose
/// lambda minor is invertible (for products of simplices: x_1..x_n).
/// Throws InvalidInput if the linear forms have rank below n.
ReducedPresentation reduce(const DJPresentation& pres);

class GradedF2Algebra;

struct CohomologyClass {
  std::size_t degree = 0;
  F2Vector coords;  // over the basis of that degree
  const GradedF2Algebra* owner = nullptr;

  bool is_zero() const { return coords.is_zero(); }
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.owner == b.owner && a.degree == b.degree && a.coords == b.coords;
  }
};

struct AlgebraLimits {
  /// Cap on the number of monomials in any single degree.
  std::size_t max_monomials_per_degree = std::size_t{1} << 18;
};

/// Finite-dimensional quotient of Z_2[y_1..y_m] by a homogeneous ideal.
///
/// The basis of H^d is the set of standard monomials for the order in which
/// the *smallest* graded-lex monomial of a relation is its leading term (the
/// leftmost pivot when degree-d monomials are listed ascending). That order
/// is multiplicative, so standard monomials are closed under division and
/// H^d is spanned by y_i * (basis of H^{d-1}); graded_basis only row-reduces
/// over those products.
class GradedF2Algebra {
 public:
  std::size_t vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Largest d with H^d != 0.
  std::size_t top_degree() const { return basis_.size() - 1; }
  std::size_t dim(std::size_t d) const { return d < basis_.size() ? basis_[d].size() : 0; }
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;

  /// Basis of H^d, descending in graded lex.
  const std::vector<Monomial>& basis(std::size_t d) const;

  /// Normal form of a monomial over basis(deg m); empty vector above the top degree.
  F2Vector reduce(const Monomial& m) const;
  CohomologyClass reduce(const Polynomial& p) const;  // p homogeneous

  CohomologyClass zero(std::size_t d) const;
  CohomologyClass one() const;
  CohomologyClass variable(std::size_t j) const;  // y_{j+1}
  CohomologyClass basis_class(std::size_t d, std::size_t i) const;
  Polynomial to_polynomial(const CohomologyClass& c) const;
  std::string to_string(const CohomologyClass& c) const;

  /// Product of two classes in normal form.
  CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) const;
  /// basis(d1)[i] * basis(d2)[j] as packed coordinates over basis(d1 + d2);
  /// empty above the top degree. Valid while the algebra lives.
  std::span<const Word> basis_product(std::size_t d1, std::size_t i, std::size_t d2, std::size_t j) const;

  /// Global index of basis(d)[i] when all degrees are concatenated.
  std::size_t global_index(std::size_t d, std::size_t i) const { return offsets_[d] + i; }
  std::size_t degree_of_global(std::size_t g) const;
  const Monomial& global_basis(std::size_t g) const;

 private:
  friend GradedF2Algebra graded_basis(const ReducedPresentation&, std::size_t, const AlgebraLimits&);

  std::vector<std::string> names_;
  std::shared_ptr<const detail::MonomialIndex> index_;
  std::vector<std::vector<Monomial>> basis_;  // per degree, descending
  std::vector<F2Matrix> normal_forms_;        // per degree: all monomials x basis
  std::vector<std::size_t> offsets_;
};

/// Builds the algebra through degree `top` and checks that degree top+1
/// vanishes (InvariantViolation otherwise). Requires top >= n.
/// Throws BudgetExceeded when a degree exceeds limits.
GradedF2Algebra graded_basis(const ReducedPresentation& red, std::size_t top, const AlgebraLimits& limits = {});

/// Throws InvalidInput if the classes belong to different algebras.
CohomologyClass cup(const GradedF2Algebra& a, const CohomologyClass& x, const CohomologyClass& y);

struct FundamentalReport {
  bool top_dimension_one = false;
  bool pairing_nondegenerate = false;
  bool total_matches_vertices = false;
  std::size_t total_dim = 0;
  std::size_t vertex_count = 0;
  std::optional<std::size_t> failing_degree;
  std::string failure;

  bool ok() const { return top_dimension_one && pairing_nondegenerate && total_matches_vertices; }
};

/// dim H^n = 1, non-degenerate pairings H^d x H^{n-d} -> H^n, sum of
/// dimensions = number of vertices of P.
FundamentalReport fundamental_checks(const GradedF2Algebra& a, const SimplePolytope& p);

/// Convenience: P + lambda -> algebra through degree n.
struct SmallCoverCohomology {
  DJPresentation presentation;
  ReducedPresentation reduced;
  GradedF2Algebra algebra;
};
SmallCoverCohomology compute_cohomology(const SimplePolytope& p, const CharacteristicFunction& lambda,
                                        const AlgebraLimits& limits = {});

}  // namespace smallcover
