#pragma once

// Characteristic functions and Bott matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/complexes.hpp"
#include "smallcover/f2linalg.hpp"

namespace smallcover {

/// lambda: facets -> Z_2^n.
struct CharacteristicFunction {
  std::size_t n = 0;
  std::vector<F2Vector> vectors;  // one per facet

  std::size_t facet_count() const { return vectors.size(); }
  /// The n x r matrix whose columns are the vectors.
  F2Matrix matrix() const;

  friend bool operator==(const CharacteristicFunction&, const CharacteristicFunction&) = default;
};

struct Validation {
  bool valid = true;
  /// Maximal simplex whose vectors are dependent (when !valid).
  VertexSet witness;
};

/// Independence on every maximal simplex of the dual. Faces of a maximal
/// simplex inherit independence, so nothing else needs checking; over Z_2
/// "direct summand" and "linearly independent" coincide.
/// Throws InvalidInput when the facet count or vector lengths disagree with P.
Validation validate_characteristic(const SimplePolytope& p, const CharacteristicFunction& lambda);

/// Block matrix A over Delta^{n_1} x ... x Delta^{n_m}. block(k, j) is the
/// piece of column alpha_j living in the coordinates of factor k, a vector
/// of length n_k (0-based k, j).
class BottMatrix {
 public:
  BottMatrix() = default;
  /// Normal form with every strictly-lower block zero (a product of RP's).
  explicit BottMatrix(std::vector<std::size_t> dims);

  /// Normal form from the strictly-lower blocks in row-major order over the
  /// lower triangle: (2,1), (3,1), (3,2), (4,1), ... (1-based block indices).
  static BottMatrix from_lower_blocks(std::vector<std::size_t> dims, const std::vector<F2Vector>& lower);
  /// Inverse of lower_bits(): "100" with dims (1,1,1) is M^3(1,0,0).
  static BottMatrix from_lower_bits(std::vector<std::size_t> dims, std::string_view bits);
  /// Arbitrary blocks; blocks[k][j] must have length dims[k].
  static BottMatrix from_blocks(std::vector<std::size_t> dims, const std::vector<std::vector<F2Vector>>& blocks);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  std::size_t dim() const;  // n

  const F2Vector& block(std::size_t k, std::size_t j) const { return blocks_[k * dims_.size() + j]; }
  void set_block(std::size_t k, std::size_t j, F2Vector v);

  /// alpha_j: the stacked blocks of column j, length n.
  F2Vector column(std::size_t j) const;

  /// Diagonal blocks all-ones and upper blocks zero.
  bool is_normal_form() const;
  /// Strictly-lower blocks in the from_lower_blocks order.
  std::vector<F2Vector> lower_blocks() const;
  /// Concatenated lower-block bits, e.g. "100" for M^3(1,0,0).
  std::string lower_bits() const;

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<F2Vector> blocks_;  // m*m, row-major
};

/// F_k^j -> e_{N_{j-1}+k}, F_0^j -> alpha_j.
CharacteristicFunction bott_to_characteristic(const BottMatrix& b);

struct NormalizedBott {
  BottMatrix matrix;
  /// New factor i is old factor permutation[i].
  std::vector<std::size_t> permutation;
};

/// Tries factor orderings in lexicographic order, starting from the identity.
/// Throws NoNormalForm if none is unipotent lower triangular.
NormalizedBott normalize_bott(const BottMatrix& b);

/// Lower-block zero test for a normal-form matrix.
bool is_projective_product(const BottMatrix& b);

struct LambdaKernel {
  std::vector<F2Vector> basis;  // vectors of length r
};

/// Kernel of the n x r lambda matrix. Throws InvalidInput if its rank is below n.
LambdaKernel lambda_kernel(const CharacteristicFunction& lambda);

/// Recovers a normal-form Bott matrix from an explicit lambda on a product of
/// simplices, after the change of basis that sends the first n facets to the
/// standard vectors. nullopt if P is not a product or no ordering works.
std::optional<NormalizedBott> recognize_bott(const SimplePolytope& p, const CharacteristicFunction& lambda);

/// Random-access enumeration of all normal-form Bott matrices for `dims`.
/// Index bits are read most-significant first along lower_bits(), so the
/// order is ascending in the matrix bit string.
class BottEnumerator {
 public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

  /// Throws BudgetExceeded if the count exceeds `budget`.
  explicit BottEnumerator(std::vector<std::size_t> dims, std::uint64_t budget = kDefaultBudget);

  std::uint64_t count() const { return std::uint64_t{1} << bits_; }
  std::size_t bit_count() const { return bits_; }
  BottMatrix at(std::uint64_t index) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t bits_ = 0;
};

}  // namespace smallcover
