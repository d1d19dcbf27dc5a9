#include "monomial_index.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "smallcover/errors.hpp"

namespace smallcover::detail {

std::size_t MonomialIndex::count(std::size_t vars, std::size_t d) {
  if (vars == 0) return d == 0 ? 1 : 0;
  // C(d + vars - 1, vars - 1), saturating.
  const std::size_t k = vars - 1;
  // c * (d + i) / i stays integral at every step; divide out the gcd first
  // so the overflow check is exact.
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t g = std::gcd(c, i);
    const std::size_t num = d + i;
    const std::size_t q = i / g;  // divides num
    if ((c / g) > std::numeric_limits<std::size_t>::max() / (num / q)) return std::numeric_limits<std::size_t>::max();
    c = (c / g) * (num / q);
  }
  return c;
}

std::shared_ptr<const MonomialIndex> MonomialIndex::get(std::size_t vars, std::size_t max_degree) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const MonomialIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[vars];
  if (!slot || slot->max_degree() < max_degree) {
    slot = std::shared_ptr<const MonomialIndex>(new MonomialIndex(vars, max_degree));
  }
  return slot;
}

MonomialIndex::MonomialIndex(std::size_t vars, std::size_t max_degree) : vars_(vars) {
  const std::size_t top = max_degree + vars + 1;
  binom_.assign(top + 1, std::vector<std::size_t>(top + 1, 0));
  for (std::size_t a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
  }

  for (std::size_t d = 0; d <= max_degree; ++d) monomials_.push_back(monomials_of_degree(vars, d));
  up_.resize(max_degree + 1);
  down_.resize(max_degree + 1);
  down_[0].assign(vars, kNone);
  for (std::size_t d = 0; d < max_degree; ++d) {
    const auto& cur = monomials_[d];
    up_[d].resize(cur.size() * vars);
    down_[d + 1].assign(monomials_[d + 1].size() * vars, kNone);
    for (std::size_t c = 0; c < cur.size(); ++c) {
      for (std::size_t i = 0; i < vars; ++i) {
        const auto t = static_cast<std::uint32_t>(rank(cur[c] * Monomial::variable(vars, i)));
        up_[d][c * vars + i] = t;
        down_[d + 1][t * vars + i] = static_cast<std::uint32_t>(c);
      }
    }
  }
}

template <class Exp>
std::size_t MonomialIndex::rank_impl(std::size_t d, Exp exp) const {
  // Position in descending lex order, then flipped: the list is ascending.
  // Monomials above m: those with a larger exponent at the first difference.
  std::size_t greater = 0;
  std::size_t left = d;
  for (std::size_t i = 0; i + 1 < vars_; ++i) {
    const std::size_t rest = vars_ - i - 1;
    const std::size_t e = exp(i);
    // sum over x in (e, left] of C(left - x + rest - 1, rest - 1)
    //   = C(left - e - 1 + rest, rest)
    if (e < left) greater += binom_[left - e - 1 + rest][rest];
    left -= e;
  }
  return monomials_[d].size() - 1 - greater;
}

std::size_t MonomialIndex::rank(const Monomial& m) const {
  const std::size_t d = m.degree();
  if (m.vars() != vars_ || d > max_degree()) throw InvalidInput("monomial outside the index");
  return rank_impl(d, [&](std::size_t i) -> std::size_t { return m[i]; });
}

std::size_t MonomialIndex::rank_of_product(const Monomial& a, const Monomial& b) const {
  const std::size_t d = a.degree() + b.degree();
  if (a.vars() != vars_ || b.vars() != vars_ || d > max_degree()) throw InvalidInput("monomial outside the index");
  return rank_impl(d, [&](std::size_t i) -> std::size_t { return std::size_t{a[i]} + b[i]; });
}

}  // namespace smallcover::detail
