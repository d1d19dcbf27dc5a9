#include "smallcover/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "smallcover/errors.hpp"
#include "smallcover/invariants.hpp"
#include "smallcover/reference.hpp"

namespace smallcover {

namespace {

std::string interval(const Interval& iv) { return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]"; }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::vector<std::string> parts;
  for (std::size_t d : dims) parts.push_back(std::to_string(d));
  return join(parts, ",");
}

struct Instance {
  SimplePolytope polytope;
  CharacteristicFunction lambda;
  SmallCoverCohomology cohomology;
};

Instance bott_instance(const std::vector<std::size_t>& dims, std::string_view bits) {
  SimplePolytope p = product_of_simplices(dims);
  CharacteristicFunction lambda = bott_to_characteristic(BottMatrix::from_lower_bits(dims, bits));
  SmallCoverCohomology c = compute_cohomology(p, lambda);
  return {std::move(p), std::move(lambda), std::move(c)};
}

Monomial power(std::size_t vars, const std::vector<std::pair<std::size_t, std::uint16_t>>& exps) {
  std::vector<std::uint16_t> e(vars, 0);
  for (auto [j, k] : exps) e[j] = k;
  return Monomial(std::move(e));
}

// bar(y_1)^{e_1} ... bar(y_m)^{e_m}.
TensorClass bar_product(const TensorSquare& ts, const std::vector<std::size_t>& exps) {
  TensorClass t = ts.one();
  for (std::size_t j = 0; j < exps.size(); ++j) {
    for (std::size_t k = 0; k < exps[j]; ++k) t = ts.multiply_bar(t, ts.algebra().variable(j));
  }
  return t;
}

bool contains_term(const TensorSquare& ts, const TensorClass& t, std::string_view text) {
  for (TensorTerm term : ts.terms(t)) {
    if (ts.term_string(term) == text) return true;
  }
  return false;
}

// "contains W" or what the product looks like instead.
std::string witness_check(const TensorSquare& ts, const TensorClass& t, std::string_view witness) {
  if (contains_term(ts, t, witness)) return "contains " + std::string(witness);
  return "missing " + std::string(witness) + " in " + ts.to_string(t);
}

// Terms sorted, for comparing expansions as sets.
std::string term_set(std::string_view expansion) {
  std::vector<std::string> terms;
  std::size_t pos = 0;
  while (pos <= expansion.size()) {
    const std::size_t next = expansion.find(" + ", pos);
    terms.emplace_back(expansion.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  std::sort(terms.begin(), terms.end());
  return "{" + join(terms, "; ") + "}";
}

BoundsReport bounds_for(const Instance& in, const ExternalValues& ext) {
  return bounds_report(in.polytope, in.lambda, in.cohomology.algebra, BoundsOptions{}, ext);
}

void for_each_composition(std::size_t max_sum, std::size_t max_parts,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (!cur.empty()) f(cur);
    if (cur.size() == max_parts) return;
    for (std::size_t k = 1; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(max_sum);
}

// Pentagon: facets 0..4 in cyclic order, vertices = adjacent pairs.
SimplePolytope pentagon() {
  std::vector<VertexSet> s;
  for (std::size_t i = 0; i < 5; ++i) s.push_back(VertexSet::from_vector({i, (i + 1) % 5}));
  return SimplePolytope::from_dual(2, SimplicialComplex::from_simplices(5, s));
}

// All characteristic functions on the pentagon (values in Z_2^2 \ 0).
std::vector<CharacteristicFunction> pentagon_lambdas(const SimplePolytope& p) {
  const std::vector<F2Vector> nonzero{F2Vector::parse("10"), F2Vector::parse("01"), F2Vector::parse("11")};
  std::vector<CharacteristicFunction> out;
  for (std::size_t code = 0; code < 243; ++code) {
    CharacteristicFunction l;
    l.n = 2;
    std::size_t c = code;
    for (std::size_t i = 0; i < 5; ++i, c /= 3) l.vectors.push_back(nonzero[c % 3]);
    if (validate_characteristic(p, l).valid) out.push_back(std::move(l));
  }
  return out;
}

reference::ReferenceInput reference_input(const SimplePolytope& p, const CharacteristicFunction& l) {
  reference::ReferenceInput in;
  in.n = p.dim();
  in.facets = p.facet_count();
  for (VertexSet s : p.dual().maximal_simplices()) {
    std::vector<int> v;
    for (std::size_t f : s.to_vector()) v.push_back(static_cast<int>(f));
    in.maximal_simplices.push_back(v);
  }
  for (const F2Vector& v : l.vectors) {
    std::vector<int> bits;
    for (std::size_t i = 0; i < v.size(); ++i) bits.push_back(v.get(i) ? 1 : 0);
    in.lambda.push_back(bits);
  }
  return in;
}

// ---------------------------------------------------------------------------
// Row bodies

std::string rp_ring(std::size_t n) {
  const Instance in = bott_instance({n}, "");
  const GradedF2Algebra& a = in.cohomology.algebra;
  std::vector<std::string> dims;
  for (std::size_t d = 0; d <= a.top_degree(); ++d) dims.push_back(std::to_string(a.dim(d)));
  const bool top = !a.reduce(power(1, {{0, static_cast<std::uint16_t>(n)}})).is_zero();
  const bool above = a.reduce(power(1, {{0, static_cast<std::uint16_t>(n + 1)}})).is_zero();
  return "dims=" + join(dims, ",") + " y^n" + (top ? "!=0" : "=0") + " y^(n+1)" + (above ? "=0" : "!=0");
}

std::string relations_of(const Instance& in) {
  std::vector<std::string> rel;
  for (const Polynomial& g : in.cohomology.reduced.generators) rel.push_back(g.to_string(in.cohomology.algebra.names()));
  return join(rel, "; ") + " dims=" + dims_string(in.cohomology.algebra.dims());
}

std::string m3_100_expansion(const ExternalValues&) {
  const Instance in = bott_instance({1, 1, 1}, "100");
  const TensorSquare ts(in.cohomology.algebra);
  return term_set(ts.to_string(bar_product(ts, {0, 3, 1})));
}

std::string m3_100_bounds(const ExternalValues& ext) {
  const Instance in = bott_instance({1, 1, 1}, "100");
  const BoundsReport r = bounds_for(in, ext);
  return "zcl>=" + std::to_string(r.zcl.value) + " tc=" + interval(r.tc);
}

std::string m3_101(const ExternalValues& ext) {
  const Instance in = bott_instance({1, 1, 1}, "101");
  const TensorSquare ts(in.cohomology.algebra);
  const BoundsReport r = bounds_for(in, ext);
  return "a2^2*a3^3 " + witness_check(ts, bar_product(ts, {0, 2, 3}), "y1y2 (x) y1y2y3") + " tc=" + interval(r.tc) +
         " tcs=" + interval(r.tcs);
}

std::string m4_row(std::string_view bits, std::string_view witness, const ExternalValues& ext) {
  const Instance in = bott_instance({1, 1, 1, 1}, bits);
  const TensorSquare ts(in.cohomology.algebra);
  const BoundsReport r = bounds_for(in, ext);
  return "a2*a3^3*a4^3 " + witness_check(ts, bar_product(ts, {0, 1, 3, 3}), witness) + " tc=" + interval(r.tc) +
         " tcs=" + interval(r.tcs);
}

std::string chain_bits(std::size_t n) {
  // block (k+1, k) = 1, everything else below the diagonal 0.
  std::string bits;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) bits += (j + 1 == k) ? '1' : '0';
  }
  return bits;
}

std::string chain_row(std::size_t n, const ExternalValues& ext) {
  const Instance in = bott_instance(std::vector<std::size_t>(n, 1), chain_bits(n));
  const GradedF2Algebra& a = in.cohomology.algebra;
  const auto nv = static_cast<std::uint16_t>(n);
  bool relations = true;
  for (std::size_t j = 1; j < n; ++j) {
    // y_{j-1} y_j = y_j^2 (1-based j-1, j)
    if (a.reduce(power(n, {{j - 1, 1}, {j, 1}})) != a.reduce(power(n, {{j, 2}}))) relations = false;
  }
  const bool top = !a.reduce(power(n, {{n - 1, nv}})).is_zero();
  const BoundsReport r = bounds_for(in, ext);
  const std::size_t target = (std::size_t{1} << r_of(n)) - 1;
  std::string s = std::string("relations ") + (relations ? "hold" : "fail") + ", y" + std::to_string(n) + "^" +
                  std::to_string(n) + (top ? " != 0" : " = 0");
  s += r.zcl.value >= target ? ", zcl >= " + std::to_string(target)
                             : ", zcl = " + std::to_string(r.zcl.value) + " < " + std::to_string(target);
  s += r.tc.lo >= target + 1 ? ", tc.lo >= " + std::to_string(target + 1)
                             : ", tc.lo = " + std::to_string(r.tc.lo) + " < " + std::to_string(target + 1);
  if (n == 4) s += ", tc = " + interval(r.tc);
  return s;
}

std::string two_factor_sweep(const ExternalValues&) {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  for (std::size_t n1 = 1; n1 < 6; ++n1) {
    for (std::size_t n2 = 1; n1 + n2 <= 6; ++n2) {
      const TcCase tcase = tc_case_classifier(n1, n2);
      if (tcase.cases.empty()) continue;
      const std::vector<std::size_t> dims{n1, n2};
      const SimplePolytope p = product_of_simplices(dims);
      const BottEnumerator e(dims);
      for (std::uint64_t i = 1; i < e.count(); ++i) {  // index 0 is the product
        const BottMatrix b = e.at(i);
        const SmallCoverCohomology c = compute_cohomology(p, bott_to_characteristic(b));
        const TensorSquare ts(c.algebra);
        const ZclResult z = zcl_lower(ts, Strategy::generators);
        ++checked;
        if (z.value + 1 < tcase.bound) {
          violations.push_back("(" + std::to_string(n1) + "," + std::to_string(n2) + "):" + b.lower_bits() +
                               " zcl+1=" + std::to_string(z.value + 1) + "<" + std::to_string(tcase.bound));
        }
      }
    }
  }
  std::string s = "checked=" + std::to_string(checked) + " violations=" + std::to_string(violations.size());
  if (!violations.empty()) s += " [" + join(violations, ", ") + "]";
  return s;
}

std::string rp_product_row(const std::vector<std::size_t>& dims, bool tc, bool tcd, bool tcs,
                           const ExternalValues& ext) {
  const Instance in = bott_instance(dims, std::string(BottMatrix(dims).lower_bits().size(), '0'));
  const BoundsReport r = bounds_for(in, ext);
  auto show = [](const char* name, const Interval& iv) {
    return iv.exact() ? std::string(name) + "=" + std::to_string(iv.lo) : std::string(name) + " in " + interval(iv);
  };
  std::vector<std::string> parts;
  if (tc) parts.push_back(show("TC", r.tc));
  if (tcd) parts.push_back(show("TCD", r.tcd));
  if (tcs) parts.push_back(show("TCS", r.tcs));
  return join(parts, " ");
}

std::string structural_sweep(const ExternalValues&) {
  std::size_t instances = 0;
  std::vector<std::string> failures;
  for_each_composition(6, 6, [&](const std::vector<std::size_t>& dims) {
    const SimplePolytope p = product_of_simplices(dims);
    const std::size_t expected_total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, [](std::size_t a, std::size_t d) { return a * (d + 1); });
    const BottEnumerator e(dims);
    for (std::uint64_t i = 0; i < e.count(); ++i) {
      const BottMatrix b = e.at(i);
      const CharacteristicFunction lambda = bott_to_characteristic(b);
      ++instances;
      std::string why;
      if (!validate_characteristic(p, lambda).valid) {
        why = "not characteristic";
      } else {
        const SmallCoverCohomology c = compute_cohomology(p, lambda);
        const GradedF2Algebra& a = c.algebra;
        const FundamentalReport f = fundamental_checks(a, p);
        const std::size_t m = dims.size();
        if (a.total_dim() != expected_total) why = "total dimension " + std::to_string(a.total_dim());
        else if (!f.ok()) why = f.failure;
        for (std::size_t j = 0; j < m && why.empty(); ++j) {
          if (a.reduce(power(m, {{j, static_cast<std::uint16_t>(dims[j])}})).is_zero()) {
            why = "y" + std::to_string(j + 1) + "^" + std::to_string(dims[j]) + " = 0";
          }
        }
        if (why.empty() && m == 2 &&
            a.reduce(power(2, {{0, static_cast<std::uint16_t>(dims[0])}, {1, static_cast<std::uint16_t>(dims[1])}}))
                .is_zero()) {
          why = "y1^n1 y2^n2 = 0";
        }
      }
      if (!why.empty() && failures.size() < 5) failures.push_back(dims_string(dims) + ":" + b.lower_bits() + " " + why);
    }
  });
  std::string s = "instances=" + std::to_string(instances) + " failures=" + std::to_string(failures.size());
  if (!failures.empty()) s += " [" + join(failures, ", ") + "]";
  return s;
}

std::string equivariant_bott(const std::vector<std::size_t>& dims, const ExternalValues& ext) {
  // Oracle: a product of simplices has prod (n_j + 1) vertices.
  const std::size_t vertices =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, [](std::size_t a, std::size_t d) { return a * (d + 1); });
  const SimplePolytope p = product_of_simplices(dims);
  const BottEnumerator e(dims);
  std::size_t agree = 0;
  for (std::uint64_t i = 0; i < e.count(); ++i) {
    const BoundsReport r = bounds_report(p, bott_to_characteristic(e.at(i)), BoundsOptions{}, ext);
    if (r.cat_equivariant == vertices) ++agree;
  }
  return "agree=" + std::to_string(agree) + "/" + std::to_string(e.count()) + " value=" + std::to_string(vertices);
}

std::string equivariant_pentagon(const ExternalValues& ext) {
  const SimplePolytope p = pentagon();
  std::size_t agree = 0;
  const auto lambdas = pentagon_lambdas(p);
  for (const auto& l : lambdas) {
    if (bounds_report(p, l, BoundsOptions{}, ext).cat_equivariant == 5) ++agree;
  }
  return "agree=" + std::to_string(agree) + "/" + std::to_string(lambdas.size()) + " value=5";
}

std::string rz_row(const SimplicialComplex& k) { return "cat=" + std::to_string(equivariant_cat_rzk(k)); }

std::string oracle_sweep(const ExternalValues&) {
  std::size_t instances = 0;
  std::vector<std::string> mismatches;
  auto check = [&](const SimplePolytope& p, const CharacteristicFunction& l, const std::string& label) {
    ++instances;
    const SmallCoverCohomology c = compute_cohomology(p, l);
    std::vector<std::size_t> ours = c.algebra.dims();
    ours.resize(p.dim() + 2, 0);
    const std::vector<std::size_t> ref = reference::reference_dimensions(reference_input(p, l), p.dim() + 1);
    if (ours != ref && mismatches.size() < 5) {
      mismatches.push_back(label + " ours=" + dims_string(ours) + " reference=" + dims_string(ref));
    }
  };
  for_each_composition(4, 3, [&](const std::vector<std::size_t>& dims) {
    const SimplePolytope p = product_of_simplices(dims);
    const BottEnumerator e(dims);
    for (std::uint64_t i = 0; i < e.count(); ++i) {
      const BottMatrix b = e.at(i);
      check(p, bott_to_characteristic(b), dims_string(dims) + ":" + b.lower_bits());
    }
  });
  const SimplePolytope pent = pentagon();
  std::size_t idx = 0;
  for (const auto& l : pentagon_lambdas(pent)) check(pent, l, "pentagon#" + std::to_string(idx++));
  std::string s = "instances=" + std::to_string(instances) + " mismatches=" + std::to_string(mismatches.size());
  if (!mismatches.empty()) s += " [" + join(mismatches, ", ") + "]";
  return s;
}

}  // namespace

std::vector<ReproRow> repro_rows() {
  std::vector<ReproRow> rows;
  auto add = [&](std::string id, int criterion, std::string claim, std::string expected,
                 std::function<std::string(const ExternalValues&)> f) {
    rows.push_back({std::move(id), criterion, std::move(claim), std::move(expected), std::move(f)});
  };

  for (std::size_t n = 1; n <= 8; ++n) {
    std::string dims;
    for (std::size_t d = 0; d <= n; ++d) dims += d ? ",1" : "1";
    add("rp/n" + std::to_string(n), 1, "H*(RP^" + std::to_string(n) + ") = Z_2[y]/(y^" + std::to_string(n + 1) + ")",
        "dims=" + dims + " y^n!=0 y^(n+1)=0", [n](const ExternalValues&) { return rp_ring(n); });
  }

  add("m3/100-relations", 2, "M^3(1,0,0): reduced relations and dimensions", "y1^2; y1y2 + y2^2; y3^2 dims=1,3,3,1",
      [](const ExternalValues&) { return relations_of(bott_instance({1, 1, 1}, "100")); });
  add("m3/100-expansion", 2, "M^3(1,0,0): a2^3 a3 has exactly four terms",
      term_set("y1y2 (x) y2y3 + y2y3 (x) y1y2 + y1y2y3 (x) y2 + y2 (x) y1y2y3"), m3_100_expansion);
  add("m3/100-bounds", 2, "M^3(1,0,0): zcl >= 4, 5 <= TC <= 7", "zcl>=4 tc=[5,7]", m3_100_bounds);

  add("m3/101", 3, "M^3(1,0,1): a2^2 a3^3 != 0, 6 <= TC <= 7, TC^S = 7",
      "a2^2*a3^3 contains y1y2 (x) y1y2y3 tc=[6,7] tcs=[7,7]", m3_101);

  const std::vector<std::pair<std::string, std::string>> m4{
      {"110110", "y1y2y3 (x) y1y2y3y4"}, {"101110", "y1y2y3 (x) y1y2y3y4"}, {"101011", "y1y2y3 (x) y1y2y3y4"},
      {"101101", "y1y2y4 (x) y1y2y3y4"}, {"111110", "y2y3y4 (x) y1y2y3y4"}};
  for (const auto& [bits, witness] : m4) {
    add("m4/" + bits, 4, "M^4(" + bits + "): a2 a3^3 a4^3 != 0, 8 <= TC <= 9, TC^S = 9",
        "a2*a3^3*a4^3 contains " + witness + " tc=[8,9] tcs=[9,9]",
        [bits = bits, witness = witness](const ExternalValues& ext) { return m4_row(bits, witness, ext); });
  }

  for (std::size_t n = 3; n <= 6; ++n) {
    const std::size_t target = (std::size_t{1} << r_of(n)) - 1;
    std::string expected = "relations hold, y" + std::to_string(n) + "^" + std::to_string(n) + " != 0, zcl >= " +
                           std::to_string(target) + ", tc.lo >= " + std::to_string(target + 1);
    if (n == 4) expected += ", tc = [8,9]";
    add("chain/n" + std::to_string(n), 5, "chain Bott manifold of dimension " + std::to_string(n), expected,
        [n](const ExternalValues& ext) { return chain_row(n, ext); });
  }

  add("sweep/two-factor-cases", 6,
      "non-product Bott matrices over Delta^n1 x Delta^n2, n1+n2 <= 6, meeting a case hypothesis: zcl+1 >= case bound",
      "checked=82 violations=0", two_factor_sweep);

  add("rp-product/1,3", 7, "TC(RP^1 x RP^3) = 5, TC^D = 5", "TC=5 TCD=5",
      [](const ExternalValues& ext) { return rp_product_row({1, 3}, true, true, false, ext); });
  add("rp-product/2,4", 7, "TC(RP^2 x RP^4) = 11", "TC=11",
      [](const ExternalValues& ext) { return rp_product_row({2, 4}, true, false, false, ext); });
  add("rp-product/1", 7, "TC^S(RP^1) = 3", "TCS=3",
      [](const ExternalValues& ext) { return rp_product_row({1}, false, false, true, ext); });

  add("sweep/structural", 8,
      "all Bott matrices with sum n_j <= 6: valid, Poincare duality, vertex count, y_j^n_j != 0",
      "instances=78184 failures=0", structural_sweep);

  for (const std::vector<std::size_t>& dims :
       {std::vector<std::size_t>{1, 1, 1}, std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{2, 2},
        std::vector<std::size_t>{1, 1, 1, 1}}) {
    std::size_t v = 1;
    for (std::size_t d : dims) v *= d + 1;
    add("equivariant/bott-" + dims_string(dims), 9, "cat_eq = vertex count over the product " + dims_string(dims),
        "agree=" + std::to_string(1U << BottEnumerator(dims).bit_count()) + "/" +
            std::to_string(1U << BottEnumerator(dims).bit_count()) + " value=" + std::to_string(v),
        [dims](const ExternalValues& ext) { return equivariant_bott(dims, ext); });
  }
  add("equivariant/pentagon", 9, "cat_eq = 5 for every small cover over the pentagon", "agree=30/30 value=5",
      equivariant_pentagon);
  for (std::size_t n = 1; n <= 5; ++n) {
    add("equivariant/rz-simplex-" + std::to_string(n), 9, "cat of RZ_K, K = dual of Delta^" + std::to_string(n),
        "cat=" + std::to_string(n + 1), [n](const ExternalValues&) { return rz_row(simplex_boundary(n)); });
  }
  add("equivariant/rz-square", 9, "cat of RZ_K, K = 4-cycle", "cat=4",
      [](const ExternalValues&) { return rz_row(product_of_simplices({1, 1}).dual()); });
  add("equivariant/rz-cube", 9, "cat of RZ_K, K = boundary of the octahedron", "cat=8",
      [](const ExternalValues&) { return rz_row(product_of_simplices({1, 1, 1}).dual()); });

  add("oracle/reference-dims", 10, "graded dimensions agree with the brute-force reducer (<= 3 survivors, n <= 4)",
      "instances=120 mismatches=0", oracle_sweep);
  return rows;
}

void override_expectations(std::vector<ReproRow>& rows, const std::map<std::string, std::string>& expected) {
  for (const auto& [id, value] : expected) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ReproRow& r) { return r.id == id; });
    if (it == rows.end()) throw InvalidInput("unknown repro row \"" + id + "\"");
    it->expected = value;
  }
}

double criterion_time_limit(int criterion) {
  switch (criterion) {
    case 1: return 1.0;   // "instantaneous"
    case 2: return 1.0;
    case 3: return 1.0;
    case 4: return 5.0;
    case 5: return 5.0;
    case 6: return 20.0;
    case 7: return 1.0;
    case 8: return 30.0;
    case 9: return 1.0;
    case 10: return 10.0;
    default: return 0.0;
  }
}

std::string_view criterion_title(int criterion) {
  switch (criterion) {
    case 1: return "RP^n rings, n <= 8";
    case 2: return "M^3(1,0,0) expansion and bounds";
    case 3: return "M^3(1,0,1) certificate and bounds";
    case 4: return "five M^4 matrices";
    case 5: return "chain Bott manifolds, 3 <= n <= 6";
    case 6: return "two-factor case sweep";
    case 7: return "RP-product exact values";
    case 8: return "structural invariants sweep";
    case 9: return "equivariant categories";
    case 10: return "brute-force oracle equivalence";
    default: return "?";
  }
}

std::vector<ReproResult> run_repro(const std::vector<ReproRow>& rows, std::string_view filter,
                                   const ExternalValues& external, std::ostream* out) {
  std::vector<ReproResult> results;
  for (const ReproRow& row : rows) {
    if (row.id.find(filter) == std::string::npos) continue;
    ReproResult r{row.id, row.criterion, row.expected, {}, false, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.actual = row.compute(external);
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = r.actual == r.expected;
    if (out != nullptr) {
      *out << (r.passed ? "PASS " : "FAIL ") << row.id << "  (" << row.claim << ")\n";
      if (!r.passed) {
        *out << "  expected: " << r.expected << "\n"
             << "  computed: " << r.actual << "\n";
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace smallcover
