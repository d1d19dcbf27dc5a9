#include "smallcover/charfun.hpp"

#include <algorithm>
#include <numeric>

#include "smallcover/errors.hpp"

namespace smallcover {

F2Matrix CharacteristicFunction::matrix() const { return F2Matrix::from_columns(vectors, n); }

Validation validate_characteristic(const SimplePolytope& p, const CharacteristicFunction& lambda) {
  if (lambda.facet_count() != p.facet_count()) {
    throw InvalidInput("lambda has " + std::to_string(lambda.facet_count()) + " vectors but P has " +
                       std::to_string(p.facet_count()) + " facets");
  }
  if (lambda.n != p.dim()) {
    throw InvalidInput("lambda takes values in Z_2^" + std::to_string(lambda.n) + " but P has dimension " +
                       std::to_string(p.dim()));
  }
  for (const F2Vector& v : lambda.vectors) {
    if (v.size() != lambda.n) throw InvalidInput("lambda vector length differs from n");
  }
  for (VertexSet sigma : p.dual().maximal_simplices()) {
    std::vector<F2Vector> cols;
    for (std::size_t i : sigma.to_vector()) cols.push_back(lambda.vectors[i]);
    if (rank(F2Matrix::from_rows(cols, lambda.n)) != cols.size()) return {false, sigma};
  }
  return {};
}

// ---------------------------------------------------------------------------
// BottMatrix

BottMatrix::BottMatrix(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidInput("Bott matrix needs at least one factor");
  for (std::size_t d : dims_) {
    if (d == 0) throw InvalidInput("Bott factor dimensions must be >= 1");
  }
  const std::size_t m = dims_.size();
  blocks_.reserve(m * m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      blocks_.push_back(k == j ? F2Vector::ones(dims_[k]) : F2Vector(dims_[k]));
    }
  }
}

BottMatrix BottMatrix::from_lower_blocks(std::vector<std::size_t> dims, const std::vector<F2Vector>& lower) {
  BottMatrix b(std::move(dims));
  const std::size_t m = b.factors();
  if (lower.size() != m * (m - 1) / 2) {
    throw InvalidInput("expected " + std::to_string(m * (m - 1) / 2) + " lower blocks, got " +
                       std::to_string(lower.size()));
  }
  std::size_t idx = 0;
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t j = 0; j < k; ++j) b.set_block(k, j, lower[idx++]);
  }
  return b;
}

BottMatrix BottMatrix::from_lower_bits(std::vector<std::size_t> dims, std::string_view bits) {
  std::vector<F2Vector> lower;
  std::size_t pos = 0;
  for (std::size_t k = 1; k < dims.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pos + dims[k] > bits.size()) throw InvalidInput("too few lower-block bits for the given dims");
      lower.push_back(F2Vector::parse(bits.substr(pos, dims[k])));
      pos += dims[k];
    }
  }
  if (pos != bits.size()) throw InvalidInput("too many lower-block bits for the given dims");
  return from_lower_blocks(std::move(dims), lower);
}

BottMatrix BottMatrix::from_blocks(std::vector<std::size_t> dims, const std::vector<std::vector<F2Vector>>& blocks) {
  BottMatrix b(std::move(dims));
  const std::size_t m = b.factors();
  if (blocks.size() != m) throw InvalidInput("Bott block matrix must have m block rows");
  for (std::size_t k = 0; k < m; ++k) {
    if (blocks[k].size() != m) throw InvalidInput("Bott block matrix must have m block columns");
    for (std::size_t j = 0; j < m; ++j) b.set_block(k, j, blocks[k][j]);
  }
  return b;
}

std::size_t BottMatrix::dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

void BottMatrix::set_block(std::size_t k, std::size_t j, F2Vector v) {
  if (v.size() != dims_[k]) {
    throw InvalidInput("block (" + std::to_string(k + 1) + "," + std::to_string(j + 1) + ") must have length " +
                       std::to_string(dims_[k]));
  }
  blocks_[k * dims_.size() + j] = std::move(v);
}

F2Vector BottMatrix::column(std::size_t j) const {
  F2Vector out(dim());
  std::size_t offset = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    block(k, j).for_each_set_bit([&](std::size_t i) { out.set(offset + i); });
    offset += dims_[k];
  }
  return out;
}

bool BottMatrix::is_normal_form() const {
  const std::size_t m = dims_.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (block(k, k) != F2Vector::ones(dims_[k])) return false;
    for (std::size_t j = k + 1; j < m; ++j) {
      if (!block(k, j).is_zero()) return false;
    }
  }
  return true;
}

std::vector<F2Vector> BottMatrix::lower_blocks() const {
  std::vector<F2Vector> out;
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) out.push_back(block(k, j));
  }
  return out;
}

std::string BottMatrix::lower_bits() const {
  std::string s;
  for (const F2Vector& v : lower_blocks()) s += v.to_string();
  return s;
}

CharacteristicFunction bott_to_characteristic(const BottMatrix& b) {
  CharacteristicFunction lambda;
  lambda.n = b.dim();
  for (std::size_t i = 0; i < lambda.n; ++i) lambda.vectors.push_back(F2Vector::unit(lambda.n, i));
  for (std::size_t j = 0; j < b.factors(); ++j) lambda.vectors.push_back(b.column(j));
  return lambda;
}

NormalizedBott normalize_bott(const BottMatrix& b) {
  const std::size_t m = b.factors();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<std::size_t> dims(m);
    for (std::size_t i = 0; i < m; ++i) dims[i] = b.dims()[perm[i]];
    std::vector<std::vector<F2Vector>> blocks(m, std::vector<F2Vector>(m));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) blocks[k][j] = b.block(perm[k], perm[j]);
    }
    BottMatrix candidate = BottMatrix::from_blocks(dims, blocks);
    if (candidate.is_normal_form()) return {std::move(candidate), perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw NoNormalForm("no ordering of the factors makes the Bott matrix unipotent lower triangular");
}

bool is_projective_product(const BottMatrix& b) {
  const auto lower = b.lower_blocks();
  return std::all_of(lower.begin(), lower.end(), [](const F2Vector& v) { return v.is_zero(); });
}

LambdaKernel lambda_kernel(const CharacteristicFunction& lambda) {
  const F2Matrix m = lambda.matrix();
  if (rank(m) != lambda.n) throw InvalidInput("lambda matrix has rank below n");
  return {kernel_basis(m)};
}

std::optional<NormalizedBott> recognize_bott(const SimplePolytope& p, const CharacteristicFunction& lambda) {
  if (!p.is_product_of_simplices()) return std::nullopt;
  const std::size_t n = lambda.n;
  const auto& dims = p.factor_dims();
  const std::size_t m = dims.size();

  // Row-reduce [first n columns | rest]; the leading minor is invertible for
  // a valid lambda since facets 0..n-1 meet in a vertex.
  const Rref red = rref(lambda.matrix());
  if (red.pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (red.pivots[i] != i) return std::nullopt;
  }
  std::vector<std::vector<F2Vector>> blocks(m, std::vector<F2Vector>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const F2Vector alpha = red.matrix.column_vector(n + j);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < m; ++k) {
      F2Vector piece(dims[k]);
      for (std::size_t i = 0; i < dims[k]; ++i) piece.set(i, alpha.get(offset + i));
      blocks[k][j] = std::move(piece);
      offset += dims[k];
    }
  }
  try {
    return normalize_bott(BottMatrix::from_blocks(dims, blocks));
  } catch (const NoNormalForm&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// BottEnumerator

BottEnumerator::BottEnumerator(std::vector<std::size_t> dims, std::uint64_t budget) : dims_(std::move(dims)) {
  BottMatrix probe(dims_);  // validates dims
  for (std::size_t k = 1; k < dims_.size(); ++k) bits_ += k * dims_[k];
  if (bits_ >= 63 || count() > budget) {
    throw BudgetExceeded("enumeration of 2^" + std::to_string(bits_) + " Bott matrices exceeds the budget of " +
                         std::to_string(budget));
  }
}

BottMatrix BottEnumerator::at(std::uint64_t index) const {
  if (index >= count()) throw InvalidInput("Bott enumeration index out of range");
  std::vector<F2Vector> lower;
  std::size_t pos = 0;
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      F2Vector v(dims_[k]);
      for (std::size_t i = 0; i < dims_[k]; ++i, ++pos) v.set(i, (index >> (bits_ - 1 - pos)) & 1U);
      lower.push_back(std::move(v));
    }
  }
  return BottMatrix::from_lower_blocks(dims_, lower);
}

}  // namespace smallcover
