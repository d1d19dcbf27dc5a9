#include "smallcover/tensor.hpp"

#include "smallcover/errors.hpp"

namespace smallcover {
namespace {

void add_matrix(F2Matrix& dst, const F2Matrix& src) {
  for (std::size_t r = 0; r < dst.rows(); ++r) dst.xor_into_row(r, src.row(r));
}

}  // namespace

TensorSquare::TensorSquare(const GradedF2Algebra& algebra) : algebra_(&algebra), v_(algebra.total_dim()) {
  if (v_ > kMaxDimension) {
    throw BudgetExceeded("tensor square of a " + std::to_string(v_) + "-dimensional algebra exceeds the limit of " +
                         std::to_string(kMaxDimension));
  }
  regular_.reserve(v_);
  regular_t_.reserve(v_);
  for (std::size_t g = 0; g < v_; ++g) {
    const std::size_t dg = algebra.degree_of_global(g);
    const CohomologyClass bg = algebra.basis_class(dg, g - algebra.global_index(dg, 0));
    F2Matrix m(v_, v_);
    for (std::size_t c = 0; c < v_; ++c) {
      const std::size_t dc = algebra.degree_of_global(c);
      const CohomologyClass prod = algebra.multiply(bg, algebra.basis_class(dc, c - algebra.global_index(dc, 0)));
      if (prod.coords.size() == 0) continue;
      const std::size_t base = algebra.global_index(prod.degree, 0);
      prod.coords.for_each_set_bit([&](std::size_t i) { m.set(c, base + i); });
    }
    regular_t_.push_back(m.transpose());
    regular_.push_back(std::move(m));
  }
}

std::vector<std::size_t> TensorSquare::total_degree_dims() const {
  const std::size_t top = algebra_->top_degree();
  std::vector<std::size_t> out(2 * top + 1, 0);
  for (std::size_t a = 0; a <= top; ++a) {
    for (std::size_t b = 0; b <= top; ++b) out[a + b] += algebra_->dim(a) * algebra_->dim(b);
  }
  return out;
}

F2Vector TensorSquare::global(const CohomologyClass& c) const {
  if (c.owner != algebra_) throw InvalidInput("class belongs to a different algebra");
  F2Vector out(v_);
  if (c.coords.size() == 0) return out;
  const std::size_t base = algebra_->global_index(c.degree, 0);
  c.coords.for_each_set_bit([&](std::size_t i) { out.set(base + i); });
  return out;
}

TensorClass TensorSquare::zero() const { return {F2Matrix(v_, v_)}; }

TensorClass TensorSquare::one() const {
  TensorClass t = zero();
  t.coeffs.set(0, 0);
  return t;
}

TensorClass TensorSquare::pure(const CohomologyClass& a, const CohomologyClass& b) const {
  const F2Vector ga = global(a);
  const F2Vector gb = global(b);
  TensorClass t = zero();
  ga.for_each_set_bit([&](std::size_t k) { t.coeffs.xor_into_row(k, gb.words()); });
  return t;
}

TensorClass TensorSquare::bar(const CohomologyClass& u) const {
  if (u.degree != 1) throw InvalidInput("bar() needs a degree-1 class");
  TensorClass t = pure(algebra_->one(), u);
  add_matrix(t.coeffs, pure(u, algebra_->one()).coeffs);
  return t;
}

F2Matrix TensorSquare::multiplication_matrix(const F2Vector& coords) const {
  F2Matrix m(v_, v_);
  coords.for_each_set_bit([&](std::size_t g) { add_matrix(m, regular_[g]); });
  return m;
}

TensorClass TensorSquare::multiply(const TensorClass& s, const TensorClass& t) const {
  // (b_i (x) b_j) T = M_i^T T M_j; group the terms of s by i.
  TensorClass out = zero();
  for (std::size_t i = 0; i < v_; ++i) {
    if (s.coeffs.row_is_zero(i)) continue;
    const F2Matrix right = multiplication_matrix(s.coeffs.row_vector(i));
    add_matrix(out.coeffs, regular_t_[i] * (t.coeffs * right));
  }
  return out;
}

TensorClass TensorSquare::multiply_bar(const TensorClass& t, const CohomologyClass& u) const {
  if (u.degree != 1) throw InvalidInput("bar() needs a degree-1 class");
  const F2Matrix mu_mat = multiplication_matrix(global(u));
  TensorClass out{mu_mat.transpose() * t.coeffs};
  add_matrix(out.coeffs, t.coeffs * mu_mat);
  return out;
}

F2Vector TensorSquare::mu(const TensorClass& t) const {
  F2Vector out(v_);
  for (std::size_t k = 0; k < v_; ++k) {
    t.coeffs.row_vector(k).for_each_set_bit([&](std::size_t l) { simd::xor_into(out.words(), regular_[k].row(l)); });
  }
  return out;
}

std::vector<TensorTerm> TensorSquare::terms(const TensorClass& t) const {
  std::vector<TensorTerm> out;
  for (std::size_t k = 0; k < v_; ++k) {
    t.coeffs.row_vector(k).for_each_set_bit([&](std::size_t l) { out.push_back({k, l}); });
  }
  return out;
}

std::string TensorSquare::term_string(TensorTerm term) const {
  return algebra_->global_basis(term.left).to_string(algebra_->names()) + " (x) " +
         algebra_->global_basis(term.right).to_string(algebra_->names());
}

std::string TensorSquare::to_string(const TensorClass& t) const {
  const auto ts = terms(t);
  if (ts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) s += " + ";
    s += term_string(ts[i]);
  }
  return s;
}

}  // namespace smallcover
