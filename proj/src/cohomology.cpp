#include "smallcover/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "smallcover/errors.hpp"
#include "monomial_index.hpp"

namespace smallcover {

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::variable(std::size_t vars, std::size_t i) {
  Monomial m(vars);
  m.exps_[i] = 1;
  return m;
}

std::size_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.vars() != vars()) throw InvalidInput("monomials over different variable sets");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = static_cast<std::uint16_t>(out.exps_[i] + other.exps_[i]);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    s += names[i];
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.vars(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void gen_monomials(std::vector<std::uint16_t>& cur, std::size_t i, std::size_t left, std::vector<Monomial>& out) {
  if (i + 1 == cur.size()) {
    cur[i] = static_cast<std::uint16_t>(left);
    out.emplace_back(cur);
    return;
  }
  for (std::size_t e = left + 1; e-- > 0;) {
    cur[i] = static_cast<std::uint16_t>(e);
    gen_monomials(cur, i + 1, left - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t vars, std::size_t degree) {
  std::vector<Monomial> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint16_t> cur(vars, 0);
  gen_monomials(cur, 0, degree, out);  // descending lex
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial::Polynomial(Monomial m) { terms_.push_back(std::move(m)); }

Polynomial Polynomial::linear(const F2Vector& coeffs) {
  Polynomial p;
  coeffs.for_each_set_bit([&](std::size_t i) { p.add_term(Monomial::variable(coeffs.size(), i)); });
  return p;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Monomial& m) { return m.degree() == degree(); });
}

void Polynomial::add_term(const Monomial& m) {
  // Descending order: find the first term not greater than m.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  if (it != terms_.end() && *it == m) {
    terms_.erase(it);
  } else {
    terms_.insert(it, m);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const Monomial& m : other.terms_) add_term(m);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const Monomial& a : terms_) {
    for (const Monomial& b : other.terms_) out.add_term(a * b);
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += " + ";
    s += terms_[i].to_string(names);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Presentations

DJPresentation build_presentation(const SimplePolytope& p, const CharacteristicFunction& lambda) {
  const Validation v = validate_characteristic(p, lambda);
  if (!v.valid) {
    throw InvalidInput("lambda is not a characteristic function: vectors on simplex " + v.witness.to_string() +
                       " are linearly dependent");
  }
  DJPresentation pres;
  pres.n = p.dim();
  pres.r = p.facet_count();
  pres.dual = p.dual();
  pres.monomial_ideal = p.minimal_nonfaces();
  pres.linear_forms = lambda.matrix();
  return pres;
}

Polynomial ReducedPresentation::facet_class(std::size_t facet) const {
  return Polynomial::linear(substitution.row_vector(facet));
}

ReducedPresentation reduce(const DJPresentation& pres) {
  if (rank(pres.linear_forms) != pres.n) throw InvalidInput("linear forms have rank below n");

  ReducedPresentation red;
  red.n = pres.n;
  red.r = pres.r;

  for (VertexSet sigma : pres.dual.maximal_simplices()) {
    const auto cols = sigma.to_vector();
    if (cols.size() == pres.n && rank(pres.linear_forms.select_columns(cols)) == pres.n) {
      red.eliminated = cols;
      break;
    }
  }
  if (red.eliminated.empty()) throw InvalidInput("no maximal simplex has an invertible lambda minor");
  for (std::size_t i = 0; i < pres.r; ++i) {
    if (std::find(red.eliminated.begin(), red.eliminated.end(), i) == red.eliminated.end()) red.survivors.push_back(i);
  }
  const std::size_t m = red.survivors.size();
  for (std::size_t j = 0; j < m; ++j) red.names.push_back("y" + std::to_string(j + 1));

  // Eliminated columns first: the RREF reads [I | C], so v_elim(i) = sum_j C_ij y_j.
  std::vector<std::size_t> order = red.eliminated;
  order.insert(order.end(), red.survivors.begin(), red.survivors.end());
  const Rref rr = rref(pres.linear_forms.select_columns(order));

  red.substitution = F2Matrix(pres.r, m);
  for (std::size_t i = 0; i < pres.n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (rr.matrix.get(i, pres.n + j)) red.substitution.set(red.eliminated[i], j);
    }
  }
  for (std::size_t j = 0; j < m; ++j) red.substitution.set(red.survivors[j], j);

  for (VertexSet tau : pres.monomial_ideal) {
    Polynomial g{Monomial(m)};
    for (std::size_t facet : tau.to_vector()) g = g * red.facet_class(facet);
    red.generators.push_back(std::move(g));
  }
  return red;
}

// ---------------------------------------------------------------------------
// Graded algebra

std::size_t GradedF2Algebra::total_dim() const {
  std::size_t t = 0;
  for (const auto& b : basis_) t += b.size();
  return t;
}

std::vector<std::size_t> GradedF2Algebra::dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis_) out.push_back(b.size());
  return out;
}

const std::vector<Monomial>& GradedF2Algebra::basis(std::size_t d) const {
  static const std::vector<Monomial> empty;
  return d < basis_.size() ? basis_[d] : empty;
}

F2Vector GradedF2Algebra::reduce(const Monomial& m) const {
  const std::size_t d = m.degree();
  if (m.vars() != vars()) throw InvalidInput("monomial over a different variable set");
  if (d >= normal_forms_.size()) return F2Vector(0);
  return normal_forms_[d].row_vector(index_->rank(m));
}

CohomologyClass GradedF2Algebra::reduce(const Polynomial& p) const {
  if (!p.is_homogeneous()) throw InvalidInput("cannot reduce an inhomogeneous polynomial to one class");
  CohomologyClass c = zero(p.degree());
  for (const Monomial& m : p.terms()) {
    if (c.coords.size() > 0) c.coords ^= reduce(m);
  }
  return c;
}

CohomologyClass GradedF2Algebra::zero(std::size_t d) const { return {d, F2Vector(dim(d)), this}; }

CohomologyClass GradedF2Algebra::one() const { return basis_class(0, 0); }

CohomologyClass GradedF2Algebra::variable(std::size_t j) const {
  return reduce(Polynomial(Monomial::variable(vars(), j)));
}

CohomologyClass GradedF2Algebra::basis_class(std::size_t d, std::size_t i) const {
  return {d, F2Vector::unit(dim(d), i), this};
}

Polynomial GradedF2Algebra::to_polynomial(const CohomologyClass& c) const {
  Polynomial p;
  c.coords.for_each_set_bit([&](std::size_t i) { p += Polynomial(basis_[c.degree][i]); });
  return p;
}

std::string GradedF2Algebra::to_string(const CohomologyClass& c) const { return to_polynomial(c).to_string(names_); }

CohomologyClass GradedF2Algebra::multiply(const CohomologyClass& a, const CohomologyClass& b) const {
  CohomologyClass out = zero(a.degree + b.degree);
  if (out.coords.size() == 0) return out;  // above the top degree
  a.coords.for_each_set_bit([&](std::size_t i) {
    b.coords.for_each_set_bit(
        [&](std::size_t j) { simd::xor_into(out.coords.words(), basis_product(a.degree, i, b.degree, j)); });
  });
  return out;
}

std::span<const Word> GradedF2Algebra::basis_product(std::size_t d1, std::size_t i, std::size_t d2,
                                                     std::size_t j) const {
  const std::size_t d = d1 + d2;
  if (d >= normal_forms_.size()) return {};
  return normal_forms_[d].row(index_->rank_of_product(basis_[d1][i], basis_[d2][j]));
}

std::size_t GradedF2Algebra::degree_of_global(std::size_t g) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

const Monomial& GradedF2Algebra::global_basis(std::size_t g) const {
  const std::size_t d = degree_of_global(g);
  return basis_[d][g - offsets_[d]];
}

GradedF2Algebra graded_basis(const ReducedPresentation& red, std::size_t top, const AlgebraLimits& limits) {
  if (top < red.n) throw InvalidInput("graded_basis: top degree must be at least n");
  const std::size_t m = red.vars();
  for (std::size_t d = 0; d <= top + 1; ++d) {
    const std::size_t c = detail::MonomialIndex::count(m, d);
    if (c > limits.max_monomials_per_degree) {
      throw BudgetExceeded("degree " + std::to_string(d) + " has " + std::to_string(c) +
                           " monomials, over the limit of " + std::to_string(limits.max_monomials_per_degree));
    }
  }
  for (const Polynomial& g : red.generators) {
    if (!g.is_zero() && g.degree() == 0) throw InvalidInput("presentation has a unit relation; the ring is zero");
  }

  GradedF2Algebra alg;
  alg.names_ = red.names;
  alg.index_ = detail::MonomialIndex::get(m, top + 1);
  const detail::MonomialIndex& idx = *alg.index_;

  // Degree 0: just 1.
  std::vector<std::uint32_t> standard{0};  // ascending monomial indices of the current basis
  alg.basis_.push_back({idx.monomials(0)[0]});
  alg.normal_forms_.push_back(F2Matrix::identity(1));

  for (std::size_t d = 1; d <= top + 1; ++d) {
    const auto& monos = idx.monomials(d);
    const std::size_t count = monos.size();
    const F2Matrix& prev_nf = alg.normal_forms_[d - 1];
    const std::size_t prev_dim = standard.size();

    // Columns: the products y_i * b, b in the previous basis, ascending.
    std::vector<std::int32_t> scol(count, -1);
    for (std::uint32_t b : standard) {
      for (std::size_t i = 0; i < m; ++i) scol[idx.up(d - 1, b, i)] = 0;
    }
    std::vector<std::uint32_t> spanning;
    for (std::size_t c = 0; c < count; ++c) {
      if (scol[c] == 0) {
        scol[c] = static_cast<std::int32_t>(spanning.size());
        spanning.push_back(static_cast<std::uint32_t>(c));
      }
    }
    const std::size_t k = spanning.size();

    // prev_nf columns are in descending basis order; standard[] is ascending.
    std::vector<std::size_t> target(prev_dim * m);
    for (std::size_t p = 0; p < prev_dim; ++p) {
      const std::uint32_t b = standard[prev_dim - 1 - p];
      for (std::size_t i = 0; i < m; ++i) target[p * m + i] = static_cast<std::size_t>(scol[idx.up(d - 1, b, i)]);
    }

    // Each factorization mu = y_i * nu gives mu = y_i * NF(nu). The first one
    // expresses mu over the spanning set; the others are relations, reduced
    // into an echelon basis as they come (most of them are redundant).
    F2Matrix expr(count, k);
    F2Matrix echelon(k, k);
    std::vector<std::int32_t> lead_row(k, -1);
    std::size_t rank_d = 0;
    std::vector<Word> scratch(expr.stride());
    auto add_relation = [&]() {
      for (std::size_t w = 0; w < scratch.size(); ++w) {
        while (scratch[w] != 0) {
          const std::size_t q = w * 64 + static_cast<std::size_t>(__builtin_ctzll(scratch[w]));
          if (lead_row[q] < 0) {
            std::copy(scratch.begin(), scratch.end(), echelon.row(rank_d).begin());
            lead_row[q] = static_cast<std::int32_t>(rank_d++);
            return;
          }
          simd::xor_into(scratch, echelon.row(static_cast<std::size_t>(lead_row[q])));
        }
      }
    };
    for (std::size_t c = 0; c < count; ++c) {
      bool first = true;
      for (std::size_t i = 0; i < m; ++i) {
        const std::uint32_t nu = idx.down(d, c, i);
        if (nu == detail::MonomialIndex::kNone) continue;
        if (!first && rank_d == k) break;
        std::span<Word> dst = first ? expr.row(c) : std::span<Word>(scratch);
        if (!first) std::fill(scratch.begin(), scratch.end(), Word{0});
        const auto words = prev_nf.row(nu);
        for (std::size_t w = 0; w < words.size(); ++w) {
          for (Word bits = words[w]; bits != 0; bits &= bits - 1) {
            const std::size_t q = target[(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))) * m + i];
            dst[q / 64] ^= Word{1} << (q % 64);
          }
        }
        if (first) {
          first = false;
        } else {
          simd::xor_into(scratch, expr.row(c));
          add_relation();
        }
      }
    }
    for (const Polynomial& g : red.generators) {
      if (rank_d == k) break;
      if (g.is_zero() || g.degree() != d) continue;
      std::fill(scratch.begin(), scratch.end(), Word{0});
      for (const Monomial& t : g.terms()) simd::xor_into(scratch, expr.row(idx.rank(t)));
      add_relation();
    }
    F2Matrix relations(rank_d, k);
    for (std::size_t t = 0; t < rank_d; ++t) relations.xor_into_row(t, echelon.row(t));
    const Rref rr = rref(std::move(relations));
    std::vector<std::int32_t> pivot_row(k, -1);
    for (std::size_t t = 0; t < rr.pivots.size(); ++t) pivot_row[rr.pivots[t]] = static_cast<std::int32_t>(t);

    std::vector<std::uint32_t> next;  // ascending
    std::vector<std::size_t> asc_pos(k, 0);
    for (std::size_t q = 0; q < k; ++q) {
      if (pivot_row[q] < 0) {
        asc_pos[q] = next.size();
        next.push_back(spanning[q]);
      }
    }
    if (d == top + 1) {
      if (!next.empty()) {
        throw InvariantViolation("degree " + std::to_string(d) + " of the quotient is nonzero (dimension " +
                                 std::to_string(next.size()) + ")");
      }
      break;
    }

    // Normal forms: clear pivot columns with the (fully reduced) pivot rows.
    const std::size_t dim = next.size();
    F2Matrix nf(count, dim);
    for (std::size_t c = 0; c < count; ++c) {
      auto v = expr.row(c);
      for (std::size_t w = 0; w < v.size(); ++w) {
        for (Word bits = v[w]; bits != 0; bits &= bits - 1) {
          const std::size_t q = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          if (pivot_row[q] >= 0) expr.xor_into_row(c, rr.matrix.row(static_cast<std::size_t>(pivot_row[q])));
        }
      }
      for (std::size_t w = 0; w < v.size(); ++w) {
        for (Word bits = v[w]; bits != 0; bits &= bits - 1) {
          const std::size_t q = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          nf.set(c, dim - 1 - asc_pos[q]);
        }
      }
    }

    std::vector<Monomial> basis;
    for (std::size_t p = dim; p-- > 0;) basis.push_back(monos[next[p]]);
    alg.basis_.push_back(std::move(basis));
    alg.normal_forms_.push_back(std::move(nf));
    standard = std::move(next);
    if (standard.empty()) {
      // Degree-1 generated: everything above vanishes too.
      break;
    }
  }

  while (alg.basis_.size() > 1 && alg.basis_.back().empty()) {
    alg.basis_.pop_back();
    alg.normal_forms_.pop_back();
  }
  std::size_t offset = 0;
  for (const auto& b : alg.basis_) {
    alg.offsets_.push_back(offset);
    offset += b.size();
  }
  return alg;
}

CohomologyClass cup(const GradedF2Algebra& a, const CohomologyClass& x, const CohomologyClass& y) {
  if (x.owner != &a || y.owner != &a) throw InvalidInput("cup: classes belong to a different algebra");
  return a.multiply(x, y);
}

FundamentalReport fundamental_checks(const GradedF2Algebra& a, const SimplePolytope& p) {
  FundamentalReport rep;
  const std::size_t n = p.dim();
  rep.total_dim = a.total_dim();
  rep.vertex_count = p.vertex_count();
  rep.top_dimension_one = a.top_degree() == n && a.dim(n) == 1;
  if (!rep.top_dimension_one) {
    rep.failing_degree = n;
    rep.failure = "dim H^" + std::to_string(n) + " = " + std::to_string(a.dim(n)) + ", expected 1";
  }

  rep.pairing_nondegenerate = rep.top_dimension_one;
  for (std::size_t d = 0; d <= n && rep.pairing_nondegenerate; ++d) {
    const std::size_t rows = a.dim(d);
    const std::size_t cols = a.dim(n - d);
    F2Matrix pairing(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (a.basis_product(d, i, n - d, j)[0] & 1U) pairing.set(i, j);
      }
    }
    if (rows != cols || rank(pairing) != rows) {
      rep.pairing_nondegenerate = false;
      rep.failing_degree = d;
      rep.failure = "cup pairing H^" + std::to_string(d) + " x H^" + std::to_string(n - d) + " -> H^" +
                    std::to_string(n) + " is degenerate";
    }
  }

  rep.total_matches_vertices = rep.total_dim == rep.vertex_count;
  if (!rep.total_matches_vertices && rep.failure.empty()) {
    rep.failure = "total dimension " + std::to_string(rep.total_dim) + " differs from vertex count " +
                  std::to_string(rep.vertex_count);
  }
  return rep;
}

SmallCoverCohomology compute_cohomology(const SimplePolytope& p, const CharacteristicFunction& lambda,
                                        const AlgebraLimits& limits) {
  DJPresentation pres = build_presentation(p, lambda);
  ReducedPresentation red = reduce(pres);
  GradedF2Algebra alg = graded_basis(red, p.dim(), limits);
  return {std::move(pres), std::move(red), std::move(alg)};
}

}  // namespace smallcover
