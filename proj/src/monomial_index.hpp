#pragma once

// Shared, immutable tables of all monomials in m variables up to some degree:
// ascending graded-lex lists, ranks, and multiply/divide-by-variable maps.
// One table per variable count is cached process-wide.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "smallcover/cohomology.hpp"

namespace smallcover::detail {

class MonomialIndex {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffU;

  /// Cached table covering degrees 0..max_degree. Thread-safe.
  static std::shared_ptr<const MonomialIndex> get(std::size_t vars, std::size_t max_degree);
  /// Number of degree-d monomials in `vars` variables, saturating at SIZE_MAX.
  static std::size_t count(std::size_t vars, std::size_t d);

  std::size_t vars() const { return vars_; }
  std::size_t max_degree() const { return monomials_.size() - 1; }
  const std::vector<Monomial>& monomials(std::size_t d) const { return monomials_[d]; }

  /// Position of m in monomials(deg m).
  std::size_t rank(const Monomial& m) const;
  /// rank(a * b) without building the product.
  std::size_t rank_of_product(const Monomial& a, const Monomial& b) const;
  /// Index of y_i * monomials(d)[c] in monomials(d + 1); d < max_degree().
  std::uint32_t up(std::size_t d, std::size_t c, std::size_t i) const { return up_[d][c * vars_ + i]; }
  /// Index of monomials(d)[c] / y_i in monomials(d - 1), or kNone.
  std::uint32_t down(std::size_t d, std::size_t c, std::size_t i) const { return down_[d][c * vars_ + i]; }

 private:
  MonomialIndex(std::size_t vars, std::size_t max_degree);
  template <class Exp>
  std::size_t rank_impl(std::size_t d, Exp exp) const;

  std::size_t vars_;
  std::vector<std::vector<Monomial>> monomials_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> down_;
  std::vector<std::vector<std::size_t>> binom_;  // binom_[a][b]
};

}  // namespace smallcover::detail
