#include "smallcover/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "smallcover/errors.hpp"

namespace smallcover {

std::size_t r_of(std::size_t n) {
  if (n == 0) throw InvalidInput("r_of needs n >= 1");
  std::size_t r = 1;
  while ((std::size_t{1} << r) - 1 < n) ++r;
  return r;
}

bool in_S(std::size_t n) {
  if (n == 0) throw InvalidInput("in_S needs n >= 1");
  // Some 0 < i < n has its bits inside n's exactly when n has two or more bits.
  return (n & (n - 1)) == 0;
}

CupLength cup_length(const GradedF2Algebra& a) {
  CupLength out;
  out.value = a.top_degree();
  for (std::size_t d = 2; d <= a.top_degree(); ++d) {
    std::vector<F2Vector> rows;
    for (std::size_t j = 0; j < a.dim(1); ++j) {
      for (std::size_t i = 0; i < a.dim(d - 1); ++i) {
        rows.push_back(a.multiply(a.basis_class(1, j), a.basis_class(d - 1, i)).coords);
      }
    }
    if (rank(F2Matrix::from_rows(rows, a.dim(d))) != a.dim(d)) {
      out.degree_one_generated = false;
      break;
    }
  }
  return out;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::generators:
      return "generators";
    case Strategy::linear:
      return "linear";
    case Strategy::full:
      return "full";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "generators") return Strategy::generators;
  if (name == "linear") return Strategy::linear;
  if (name == "full") return Strategy::full;
  throw InvalidInput("unknown strategy '" + std::string(name) + "' (expected generators, linear or full)");
}

// ---------------------------------------------------------------------------
// Certificates

std::string Certificate::render() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += f.description;
    if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
  }
  if (s.empty()) s = "1";
  return s + " != 0, witness " + witness_text;
}

TensorTerm choose_witness(const TensorSquare& ts, const TensorClass& product) {
  const auto& alg = ts.algebra();
  const auto terms = ts.terms(product);
  if (terms.empty()) throw InvalidInput("choose_witness: product is zero");

  auto key = [&](TensorTerm t) {
    const std::size_t dl = alg.degree_of_global(t.left);
    const std::size_t dr = alg.degree_of_global(t.right);
    return std::make_tuple(dl > dr ? dl - dr : dr - dl, dl);
  };
  TensorTerm best = terms.front();
  for (TensorTerm t : terms) {
    const auto kt = key(t);
    const auto kb = key(best);
    if (kt != kb) {
      if (kt < kb) best = t;
      continue;
    }
    const Monomial& lt = alg.global_basis(t.left);
    const Monomial& lb = alg.global_basis(best.left);
    if (lt != lb) {
      if (grlex_less(lb, lt)) best = t;
      continue;
    }
    if (grlex_less(alg.global_basis(best.right), alg.global_basis(t.right))) best = t;
  }
  return best;
}

bool verify_certificate(const TensorSquare& ts, const Certificate& cert) {
  TensorClass prod = ts.one();
  std::size_t length = 0;
  for (const auto& f : cert.factors) {
    for (std::size_t e = 0; e < f.exponent; ++e) prod = ts.multiply(f.element, prod);
    length += f.exponent;
  }
  if (length != cert.length || prod.is_zero()) return false;
  if (!cert.witness) return false;
  return prod.coeffs.get(cert.witness->left, cert.witness->right) && ts.to_string(prod) == cert.expansion;
}

// ---------------------------------------------------------------------------
// Exponent-vector search

namespace {

struct Candidate {
  std::string description;
  TensorClass element;
  std::size_t degree = 1;
  std::optional<CohomologyClass> bar_of;  // fast path for bar(u)
};

class ExponentSearch {
 public:
  ExponentSearch(const TensorSquare& ts, std::vector<Candidate> cands, std::size_t cap, std::uint64_t budget)
      : ts_(ts), cands_(std::move(cands)), cap_(cap), budget_(budget) {
    degree_limit_ = 2 * ts.algebra().top_degree();
  }

  /// Continues from `start`: only strictly longer products replace it.
  ZclResult run(const ZclResult& start, bool has_start) {
    result_ = start;
    best_ = has_start ? static_cast<long>(start.value) : -1;
    nodes_ = start.nodes;

    maxpow_.assign(cands_.size(), 0);
    for (std::size_t j = 0; j < cands_.size() && !exhausted_; ++j) {
      TensorClass cur = ts_.one();
      for (std::size_t c = 1; c <= cap_; ++c) {
        cur = mul(cur, j);
        if (!charge()) break;
        if (cur.is_zero()) break;
        maxpow_[j] = c;
      }
    }
    suffix_.assign(cands_.size() + 1, 0);
    for (std::size_t j = cands_.size(); j-- > 0;) suffix_[j] = suffix_[j + 1] + maxpow_[j];

    exps_.assign(cands_.size(), 0);
    if (!exhausted_) dfs(0, ts_.one(), 0, 0);

    result_.nodes = nodes_;
    result_.budget_exhausted = result_.budget_exhausted || exhausted_;
    return result_;
  }

 private:
  TensorClass mul(const TensorClass& t, std::size_t j) const {
    const Candidate& c = cands_[j];
    return c.bar_of ? ts_.multiply_bar(t, *c.bar_of) : ts_.multiply(c.element, t);
  }

  bool charge() {
    if (++nodes_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  void dfs(std::size_t j, const TensorClass& t, std::size_t len, std::size_t deg) {
    if (j == cands_.size()) {
      if (static_cast<long>(len) > best_) record(t, len);
      return;
    }
    const std::size_t room = degree_limit_ >= deg ? degree_limit_ - deg : 0;
    if (static_cast<long>(len + std::min(suffix_[j], room)) <= best_) return;

    TensorClass cur = t;
    for (std::size_t c = 0; c <= maxpow_[j]; ++c) {
      if (c > 0) {
        cur = mul(cur, j);
        if (!charge()) return;
        if (cur.is_zero()) break;
      }
      exps_[j] = c;
      dfs(j + 1, cur, len + c, deg + c * cands_[j].degree);
      if (exhausted_) return;
    }
    exps_[j] = 0;
  }

  void record(const TensorClass& product, std::size_t len) {
    best_ = static_cast<long>(len);
    Certificate cert;
    for (std::size_t j = 0; j < cands_.size(); ++j) {
      if (exps_[j] > 0) cert.factors.push_back({cands_[j].description, exps_[j], cands_[j].element});
    }
    cert.length = len;
    cert.witness = choose_witness(ts_, product);
    cert.witness_text = ts_.term_string(*cert.witness);
    cert.expansion = ts_.to_string(product);
    result_.value = len;
    result_.certificate = std::move(cert);
  }

  const TensorSquare& ts_;
  std::vector<Candidate> cands_;
  std::size_t cap_;
  std::uint64_t budget_;
  std::size_t degree_limit_ = 0;

  ZclResult result_;
  long best_ = -1;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> maxpow_;
  std::vector<std::size_t> suffix_;
  std::vector<std::size_t> exps_;
};

std::size_t effective_cap(const TensorSquare& ts, const SearchCaps& caps) {
  return caps.exponent_cap != 0 ? caps.exponent_cap : 2 * ts.algebra().top_degree();
}

Candidate bar_candidate(const TensorSquare& ts, const CohomologyClass& u) {
  return {"bar(" + ts.algebra().to_string(u) + ")", ts.bar(u), 1, u};
}

std::vector<Candidate> generator_candidates(const TensorSquare& ts) {
  std::vector<Candidate> out;
  const auto& alg = ts.algebra();
  for (std::size_t j = 0; j < alg.vars(); ++j) {
    Candidate c = bar_candidate(ts, alg.variable(j));
    c.description = "bar(" + alg.names()[j] + ")";  // name the generator even if it reduces
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> linear_candidates(const TensorSquare& ts, std::uint64_t budget) {
  const auto& alg = ts.algebra();
  const std::size_t h = alg.dim(1);
  if (h >= 40 || (std::uint64_t{1} << h) > budget) {
    throw BudgetExceeded("linear strategy needs 2^" + std::to_string(h) + " - 1 candidates");
  }
  std::vector<Candidate> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h); ++mask) {
    CohomologyClass u = alg.zero(1);
    for (std::size_t i = 0; i < h; ++i) {
      if ((mask >> i) & 1U) u.coords.flip(i);
    }
    out.push_back(bar_candidate(ts, u));
  }
  return out;
}

/// Basis of ker(mu) in each total degree 1..cap.
std::vector<Candidate> kernel_candidates(const TensorSquare& ts, std::size_t cap) {
  const auto& alg = ts.algebra();
  const std::size_t v = ts.dimension();
  std::vector<Candidate> out;
  for (std::size_t d = 1; d <= cap && d <= 2 * alg.top_degree(); ++d) {
    std::vector<TensorTerm> pairs;
    for (std::size_t k = 0; k < v; ++k) {
      for (std::size_t l = 0; l < v; ++l) {
        if (alg.degree_of_global(k) + alg.degree_of_global(l) == d) pairs.push_back({k, l});
      }
    }
    std::vector<F2Vector> images;
    for (TensorTerm t : pairs) {
      TensorClass e = ts.zero();
      e.coeffs.set(t.left, t.right);
      images.push_back(ts.mu(e));
    }
    const F2Matrix mu_d = F2Matrix::from_columns(images, v);
    for (const F2Vector& k : kernel_basis(mu_d)) {
      TensorClass e = ts.zero();
      k.for_each_set_bit([&](std::size_t i) { e.coeffs.set(pairs[i].left, pairs[i].right); });
      out.push_back({"(" + ts.to_string(e) + ")", std::move(e), d, std::nullopt});
    }
  }
  return out;
}

std::vector<Candidate> norm_candidates(const TensorSquare& ts, std::size_t cap) {
  const auto& alg = ts.algebra();
  const std::size_t v = ts.dimension();
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::size_t d = alg.degree_of_global(i) + alg.degree_of_global(j);
      if (d == 0 || d > cap) continue;
      TensorClass e = ts.zero();
      e.coeffs.set(i, j);
      e.coeffs.set(j, i);
      out.push_back({"(" + ts.to_string(e) + ")", std::move(e), d, std::nullopt});
    }
  }
  return out;
}

}  // namespace

ZclResult zcl_lower(const TensorSquare& ts, Strategy strategy, const SearchCaps& caps) {
  const std::size_t cap = effective_cap(ts, caps);
  ZclResult res = ExponentSearch(ts, generator_candidates(ts), cap, caps.budget).run({}, false);
  res.strategy = Strategy::generators;
  if (strategy == Strategy::generators || res.budget_exhausted) return res;

  try {
    res = ExponentSearch(ts, linear_candidates(ts, caps.budget), cap, caps.budget).run(res, true);
  } catch (const BudgetExceeded&) {
    res.budget_exhausted = true;
    return res;
  }
  res.strategy = Strategy::linear;
  if (strategy == Strategy::linear || res.budget_exhausted) return res;

  res = ExponentSearch(ts, kernel_candidates(ts, caps.full_degree_cap), cap, caps.budget).run(res, true);
  res.strategy = Strategy::full;
  return res;
}

NormResult norm_cl(const TensorSquare& ts, Strategy strategy, const SearchCaps& caps) {
  NormResult out;
  if (strategy != Strategy::full) {
    out.result = zcl_lower(ts, strategy, caps);
    out.identified_with_zcl = true;
    return out;
  }
  out.result = zcl_lower(ts, Strategy::linear, caps);
  out.identified_with_zcl = false;
  if (out.result.budget_exhausted) return out;
  out.result = ExponentSearch(ts, norm_candidates(ts, caps.full_degree_cap), effective_cap(ts, caps), caps.budget)
                   .run(out.result, true);
  out.result.strategy = Strategy::full;
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

TcCase tc_case_classifier(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw InvalidInput("tc_case_classifier needs n1, n2 >= 1");
  TcCase out;
  const std::size_t two_r = std::size_t{1} << r_of(n1 + n2);
  auto add = [&](int c, std::size_t bound) {
    out.cases.push_back(c);
    out.bound = std::max(out.bound, bound);
  };
  if (in_S(n2) && n2 > n1) add(1, (std::size_t{1} << r_of(n1)) + (std::size_t{1} << r_of(n2)) - 1);
  if (in_S(n2) && n1 % n2 == 0) add(2, two_r);
  if (n2 >= 2 && in_S(n2 - 1) && n2 > n1 + 1) add(3, two_r);
  if (n2 >= 3 && in_S(n2 - 2) && n2 > n1 + 2) add(4, two_r);
  return out;
}

RpProductTc rp_product_tc(const std::vector<std::size_t>& dims, const ExternalValues& external, std::size_t zcl) {
  if (dims.empty()) throw InvalidInput("rp_product_tc needs at least one factor");
  const std::size_t m = dims.size();
  const std::size_t n = std::accumulate(dims.begin(), dims.end(), std::size_t{0});

  RpProductTc out;
  out.tc.lo = std::max(n + 1, zcl + 1);
  out.rule = "lower: max(cat, zcl + 1)";

  const bool all_pow2 = std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return in_S(d); });
  if (all_pow2) {
    // bar(y_j)^{2 n_j - 1} products survive: zcl >= sum(2 n_j - 1).
    const std::size_t closed = 2 * n - (m - 1);
    if (closed > out.tc.lo) out.tc.lo = closed;
    out.rule += ", sum 2^{s_j} - (m - 1) for power-of-two factors";
  }

  std::size_t sum_hi = 0;
  bool all_known = true;
  for (std::size_t d : dims) {
    if (auto v = external.tc_real_projective(d)) {
      sum_hi += v->value;
      if (std::find(out.sources.begin(), out.sources.end(), v->source) == out.sources.end()) {
        out.sources.push_back(v->source);
      }
    } else {
      sum_hi += 2 * d + 1;
      all_known = false;
    }
  }
  out.tc.hi = std::min(2 * n + 1, sum_hi - (m - 1));
  out.rule += "; upper: TC(product) <= sum TC(RP^{n_j}) - (m - 1)";
  if (!all_known) out.rule += " (2 n_j + 1 where no exact factor value is known)";
  if (out.tc.lo > out.tc.hi) throw InvariantViolation("rp_product_tc: lower bound exceeds upper bound");
  return out;
}

// ---------------------------------------------------------------------------
// Report

BoundsReport bounds_report(const SimplePolytope& p, const CharacteristicFunction& lambda,
                           const GradedF2Algebra& algebra, const BoundsOptions& options,
                           const ExternalValues& external) {
  BoundsReport rep;
  const std::size_t n = p.dim();
  rep.n = n;

  rep.cat = n + 1;
  rep.cat_provenance.rule = "cat(M) = n + 1 for every small cover";
  rep.cat_equivariant = p.vertex_count();
  rep.cat_equivariant_provenance.rule = "equivariant category = number of vertices of P";

  const TensorSquare ts(algebra);
  rep.zcl = zcl_lower(ts, options.strategy, options.caps);
  if (options.strategy == Strategy::full) {
    rep.norm = norm_cl(ts, options.strategy, options.caps);
  } else {
    rep.norm.result = rep.zcl;  // bar elements are norm elements: same search
    rep.norm.identified_with_zcl = true;
  }
  rep.budget_exhausted = rep.zcl.budget_exhausted || rep.norm.result.budget_exhausted;

  rep.bott = recognize_bott(p, lambda);
  rep.projective_product = rep.bott && is_projective_product(rep.bott->matrix);

  rep.tc = {std::max(n + 1, rep.zcl.value + 1), 2 * n + 1};
  rep.tc_provenance.rule = "max(cat, zcl + 1) <= TC <= 2n + 1";
  rep.tc_provenance.certificate = rep.zcl.certificate.render();
  if (rep.projective_product) {
    const RpProductTc rp = rp_product_tc(rep.bott->matrix.dims(), external, rep.zcl.value);
    rep.tc = rp.tc;
    rep.tc_provenance.rule = "product of real projective spaces: " + rp.rule;
    for (const auto& s : rp.sources) {
      if (!rep.tc_provenance.source.empty()) rep.tc_provenance.source += ", ";
      rep.tc_provenance.source += s;
    }
  }
  if (rep.bott) {
    rep.tc_external = external.tc_bott(rep.bott->matrix.dims(), rep.bott->matrix.lower_bits());
    if (rep.bott->matrix.factors() == 2 && !rep.projective_product) {
      rep.case_info = tc_case_classifier(rep.bott->matrix.dims()[0], rep.bott->matrix.dims()[1]);
    }
  }

  rep.tcs = {std::max(rep.tc.lo, rep.norm.result.value + 2), 2 * n + 1};
  rep.tcs_provenance.rule = "max(TC, cl(norm subring) + 2) <= TC^S <= 2n + 1";
  rep.tcs_provenance.certificate = rep.norm.result.certificate.render();

  if (p.is_product_of_simplices()) {
    rep.cat1 = n + 1;
    rep.cat1_provenance.rule = "cat_1 = n + 1 for small covers over products of simplices";
  } else if (options.assert_rz_simply_connected) {
    rep.cat1 = n + 1;
    rep.cat1_provenance.rule = "cat_1 = n + 1 given the asserted simply connected real moment-angle complex";
  } else {
    rep.cat1_provenance.rule = "unavailable: simple connectivity of the real moment-angle complex not asserted";
  }

  rep.tcd = {rep.cat1.value_or(1), rep.tc.hi};
  rep.tcd_provenance.rule = rep.cat1 ? "cat_1 <= TC^D <= TC" : "1 <= TC^D <= TC";
  return rep;
}

BoundsReport bounds_report(const SimplePolytope& p, const CharacteristicFunction& lambda,
                           const BoundsOptions& options, const ExternalValues& external) {
  const SmallCoverCohomology coh = compute_cohomology(p, lambda);
  return bounds_report(p, lambda, coh.algebra, options, external);
}

}  // namespace smallcover
