#pragma once

// Cup-lengths, zero-divisor certificates and the assembled bounds report.
// All values are non-normalized (cat(point) = 1, TC(point) = 1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/charfun.hpp"
#include "smallcover/cohomology.hpp"
#include "smallcover/complexes.hpp"
#include "smallcover/external_values.hpp"
#include "smallcover/tensor.hpp"

namespace smallcover {

/// The unique r with n <= 2^r - 1 < 2n. Requires n >= 1.
std::size_t r_of(std::size_t n);

/// All binomials C(n, i), 0 < i < n, even. Lucas: C(n, i) is odd iff the bits
/// of i are a subset of the bits of n. Requires n >= 1.
bool in_S(std::size_t n);

struct CupLength {
  std::size_t value = 0;
  /// H^d = H^1 * H^{d-1} in every degree; if false, value is only an upper bound.
  bool degree_one_generated = true;
};

/// For a degree-1 generated algebra every k-fold product of positive-degree
/// classes lies in H^{>=k} and y-monomials of the top degree survive, so the
/// cup-length is the top non-vanishing degree.
CupLength cup_length(const GradedF2Algebra& a);

enum class Strategy { generators, linear, full };
std::string_view strategy_name(Strategy s);
/// Throws InvalidInput on unknown names.
Strategy parse_strategy(std::string_view name);

struct SearchCaps {
  /// Per-factor exponent cap; 0 means 2n.
  std::size_t exponent_cap = 0;
  /// Maximum number of tensor multiplications.
  std::uint64_t budget = 2'000'000;
  /// Largest total degree of kernel elements used by Strategy::full.
  std::size_t full_degree_cap = 2;
};

struct CertificateFactor {
  std::string description;  // "bar(y2)", "bar(y1 + y2)", "(1 (x) y1 + y1 (x) 1)"
  std::size_t exponent = 0;
  TensorClass element;
};

/// A nonzero product of zero-divisors (or norm elements) and one surviving term.
struct Certificate {
  std::vector<CertificateFactor> factors;  // exponent > 0 only
  std::size_t length = 0;
  std::optional<TensorTerm> witness;
  std::string witness_text;
  std::string expansion;  // every term of the product

  /// "bar(y2)^3 * bar(y3) != 0, witness y1y2 (x) y2y3".
  std::string render() const;
};

/// Re-evaluates the product and checks it is nonzero and contains the witness.
bool verify_certificate(const TensorSquare& ts, const Certificate& cert);

/// Witness rule: most balanced bidegree, then smaller left degree, then the
/// larger left monomial, then the larger right monomial (graded lex).
TensorTerm choose_witness(const TensorSquare& ts, const TensorClass& product);

struct ZclResult {
  std::size_t value = 0;
  Certificate certificate;
  Strategy strategy = Strategy::generators;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Certified lower bound for the zero-divisor cup-length. Each strategy starts
/// from the result of the previous one, so results are monotone in the
/// strategy. Ties go to the lexicographically smallest exponent vector.
ZclResult zcl_lower(const TensorSquare& ts, Strategy strategy, const SearchCaps& caps = {});

struct NormResult {
  ZclResult result;
  /// True when the search space consisted of bar elements only, which are
  /// themselves norm elements, so the value equals zcl_lower's.
  bool identified_with_zcl = true;
};

/// Cup-length of the subring generated by norm elements x (x) y + y (x) x.
NormResult norm_cl(const TensorSquare& ts, Strategy strategy, const SearchCaps& caps = {});

struct TcCase {
  std::vector<int> cases;  // subset of {1,2,3,4}
  std::size_t bound = 0;   // largest implied lower bound, 0 if no case applies
};

/// Case hypotheses for small covers over Delta^{n1} x Delta^{n2}:
/// 1: n2 in S, n2 > n1            -> 2^{r1} + 2^{r2} - 1
/// 2: n2 in S, n2 | n1            -> 2^r
/// 3: n2 - 1 in S, n2 > n1 + 1    -> 2^r
/// 4: n2 - 2 in S, n2 > n1 + 2    -> 2^r      (r = r_of(n1 + n2))
TcCase tc_case_classifier(std::size_t n1, std::size_t n2);

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool exact() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct RpProductTc {
  Interval tc;
  std::string rule;
  std::vector<std::string> sources;
};

/// TC of RP^{n_1} x ... x RP^{n_m}. `zcl` is a certified zero-divisor
/// cup-length, used for the lower end of the interval.
RpProductTc rp_product_tc(const std::vector<std::size_t>& dims, const ExternalValues& external, std::size_t zcl = 0);

struct Provenance {
  std::string rule;
  std::string certificate;  // rendered, may be empty
  std::string source;       // external citation key, may be empty
};

struct BoundsOptions {
  Strategy strategy = Strategy::generators;
  SearchCaps caps;
  bool assert_rz_simply_connected = false;
};

struct BoundsReport {
  std::size_t n = 0;

  std::size_t cat = 0;
  Provenance cat_provenance;
  std::size_t cat_equivariant = 0;
  Provenance cat_equivariant_provenance;
  std::optional<std::size_t> cat1;
  Provenance cat1_provenance;

  Interval tc;
  Provenance tc_provenance;
  std::optional<ExternalValue> tc_external;  // never merged into tc

  Interval tcs;
  Provenance tcs_provenance;
  Interval tcd;
  Provenance tcd_provenance;

  ZclResult zcl;
  NormResult norm;
  std::optional<TcCase> case_info;  // two-factor non-product Bott manifolds
  std::optional<NormalizedBott> bott;
  bool projective_product = false;
  bool budget_exhausted = false;
};

BoundsReport bounds_report(const SimplePolytope& p, const CharacteristicFunction& lambda,
                           const GradedF2Algebra& algebra, const BoundsOptions& options,
                           const ExternalValues& external);

/// Computes the cohomology first.
BoundsReport bounds_report(const SimplePolytope& p, const CharacteristicFunction& lambda,
                           const BoundsOptions& options, const ExternalValues& external);

}  // namespace smallcover
