#include "smallcover/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace smallcover::reference {

namespace {

using Exps = std::vector<int>;

// Reverse lexicographic on the exponent vector read from the last variable.
// Any fixed order works for dimensions; this one is deliberately not the
// library's.
std::vector<Exps> all_monomials(std::size_t vars, int degree) {
  std::vector<Exps> out;
  Exps cur(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == 0) {
      cur[0] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i - 1, left - e);
    }
    cur[i] = 0;
  };
  if (vars == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(rec, vars - 1, degree);
  return out;
}

struct Poly {
  std::vector<Exps> terms;  // distinct, coefficient 1
};

class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width), words_((width + 63) / 64) {}

  // Adds a row; returns true if it was independent.
  bool add(std::vector<std::uint64_t> row) {
    for (const auto& [pivot, r] : rows_) {
      if ((row[pivot / 64] >> (pivot % 64)) & 1U) {
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= r[w];
      }
    }
    for (std::size_t c = 0; c < width_; ++c) {
      if ((row[c / 64] >> (c % 64)) & 1U) {
        // keep existing rows reduced at the new pivot
        for (auto& [p, r] : rows_) {
          if ((r[c / 64] >> (c % 64)) & 1U) {
            for (std::size_t w = 0; w < words_; ++w) r[w] ^= row[w];
          }
        }
        rows_.emplace(c, std::move(row));
        return true;
      }
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }
  std::size_t words() const { return words_; }

 private:
  std::size_t width_;
  std::size_t words_;
  std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::vector<std::size_t> reference_dimensions(const ReferenceInput& in, std::size_t max_degree) {
  const std::size_t r = in.facets;
  if (r > 16) throw std::invalid_argument("reference reducer: too many facets");
  if (in.lambda.size() != r) throw std::invalid_argument("reference reducer: need one vector per facet");
  for (const auto& v : in.lambda) {
    if (v.size() != in.n) throw std::invalid_argument("reference reducer: vector length differs from n");
  }

  // Faces: subsets of some maximal simplex.
  std::vector<std::uint32_t> maximal;
  for (const auto& s : in.maximal_simplices) {
    std::uint32_t mask = 0;
    for (int f : s) {
      if (f < 0 || static_cast<std::size_t>(f) >= r) throw std::invalid_argument("reference reducer: bad facet");
      mask |= 1U << f;
    }
    maximal.push_back(mask);
  }
  auto is_face = [&](std::uint32_t s) {
    return std::any_of(maximal.begin(), maximal.end(), [&](std::uint32_t m) { return (s & ~m) == 0; });
  };

  std::vector<Poly> gens;
  // Every non-face whose proper subsets are all faces.
  for (std::uint32_t s = 1; s < (1U << r); ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < r && minimal; ++i) {
      if (((s >> i) & 1U) && !is_face(s & ~(1U << i))) minimal = false;
    }
    if (!minimal) continue;
    Exps e(r, 0);
    for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<int>((s >> i) & 1U);
    gens.push_back({{e}});
  }
  // Row i of the lambda matrix: sum of x_j with lambda_j[i] = 1.
  for (std::size_t i = 0; i < in.n; ++i) {
    Poly p;
    for (std::size_t j = 0; j < r; ++j) {
      if (in.lambda[j][i] != 0) {
        Exps e(r, 0);
        e[j] = 1;
        p.terms.push_back(e);
      }
    }
    if (!p.terms.empty()) gens.push_back(p);
  }

  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const auto monos = all_monomials(r, static_cast<int>(d));
    std::map<Exps, std::size_t> column;
    for (std::size_t c = 0; c < monos.size(); ++c) column[monos[c]] = c;
    Echelon ech(monos.size());
    for (const Poly& g : gens) {
      int gd = 0;
      for (int e : g.terms.front()) gd += e;
      if (static_cast<std::size_t>(gd) > d) continue;
      for (const Exps& mult : all_monomials(r, static_cast<int>(d) - gd)) {
        if (ech.rank() == monos.size()) break;
        std::vector<std::uint64_t> row(ech.words(), 0);
        for (const Exps& t : g.terms) {
          Exps prod(r);
          for (std::size_t i = 0; i < r; ++i) prod[i] = t[i] + mult[i];
          const std::size_t c = column.at(prod);
          row[c / 64] ^= std::uint64_t{1} << (c % 64);
        }
        ech.add(std::move(row));
      }
    }
    dims.push_back(monos.size() - ech.rank());
  }
  return dims;
}

}  // namespace smallcover::reference
