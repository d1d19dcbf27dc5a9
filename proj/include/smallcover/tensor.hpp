#pragma once

// H* (x) H* over Z_2, stored densely as V x V bit matrices: entry (k, l) is the
// coefficient of b_k (x) b_l, where b_0..b_{V-1} is the algebra basis in
// global order (by degree, then basis order). Signs vanish mod 2.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "smallcover/cohomology.hpp"
#include "smallcover/f2linalg.hpp"

namespace smallcover {

struct TensorClass {
  F2Matrix coeffs;

  bool is_zero() const { return coeffs.is_zero(); }
  friend bool operator==(const TensorClass&, const TensorClass&) = default;
};

struct TensorTerm {
  std::size_t left = 0;   // global basis index
  std::size_t right = 0;  // global basis index
};

class TensorSquare {
 public:
  /// Largest V accepted; the regular representation costs V^3 bits.
  static constexpr std::size_t kMaxDimension = 512;

  /// Throws BudgetExceeded if dim H* exceeds kMaxDimension.
  explicit TensorSquare(const GradedF2Algebra& algebra);

  const GradedF2Algebra& algebra() const { return *algebra_; }
  std::size_t dimension() const { return v_; }

  /// Dimensions of the total-degree components 0..2*top.
  std::vector<std::size_t> total_degree_dims() const;

  TensorClass zero() const;
  TensorClass one() const;
  /// a (x) b.
  TensorClass pure(const CohomologyClass& a, const CohomologyClass& b) const;
  /// 1 (x) u + u (x) 1. Throws InvalidInput unless deg u = 1.
  TensorClass bar(const CohomologyClass& u) const;

  TensorClass multiply(const TensorClass& s, const TensorClass& t) const;
  /// t * bar(u), using two multiplication-matrix products.
  TensorClass multiply_bar(const TensorClass& t, const CohomologyClass& u) const;

  /// The multiplication map to H*, as a vector over the global basis.
  F2Vector mu(const TensorClass& t) const;

  /// Nonzero terms, ordered by (left, right).
  std::vector<TensorTerm> terms(const TensorClass& t) const;
  /// "y1y2 (x) y2y3".
  std::string term_string(TensorTerm term) const;
  /// "y1y2 (x) y2y3 + y2y3 (x) y1y2", terms in (left, right) order.
  std::string to_string(const TensorClass& t) const;

  /// Left multiplication by the element with global coordinates `coords`,
  /// as a V x V matrix: row c is (element * b_c).
  F2Matrix multiplication_matrix(const F2Vector& coords) const;

 private:
  const GradedF2Algebra* algebra_;
  std::size_t v_ = 0;
  std::vector<F2Matrix> regular_;  // regular_[g]: multiplication by b_g
  std::vector<F2Matrix> regular_t_;

  F2Vector global(const CohomologyClass& c) const;
};

}  // namespace smallcover
