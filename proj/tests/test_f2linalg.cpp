#include <doctest.h>

#include <random>
#include <set>

#include "smallcover/errors.hpp"
#include "smallcover/f2linalg.hpp"

using namespace smallcover;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, unsigned one_in = 2) {
  F2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % one_in == 0) m.set(i, j);
  return m;
}

// |row space| = 2^rank, counted by enumerating all subsets of rows.
std::size_t brute_rank(const F2Matrix& m) {
  std::set<std::string> span;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.rows()); ++s) {
    F2Vector v(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      if ((s >> r) & 1U) v ^= m.row_vector(r);
    span.insert(v.to_string());
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

}  // namespace

TEST_SUITE("f2linalg") {

TEST_CASE("vector basics") {
  const F2Vector v = F2Vector::parse("10110");
  CHECK(v.size() == 5);
  CHECK(v.to_string() == "10110");
  CHECK(v == F2Vector::of({1, 0, 1, 1, 0}));
  CHECK(v.popcount() == 3);
  CHECK(v.first_set() == 0);
  CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
  CHECK((v ^ v).is_zero());
  CHECK(v.dot(F2Vector::parse("00110")) == false);
  CHECK(v.dot(F2Vector::parse("00100")) == true);
  CHECK(F2Vector(70).first_set() == 70);
  CHECK(F2Vector::unit(130, 129).first_set() == 129);
  CHECK(F2Vector::ones(3).to_string() == "111");
  CHECK_THROWS_AS(F2Vector::parse("102"), InvalidInput);
}

TEST_CASE("rank agrees with brute-force span counting") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 9;
    const F2Matrix m = random_matrix(rng, r, c, 1 + t % 3);
    CHECK(rank(m) == brute_rank(m));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rref is reduced and row-equivalent") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const F2Matrix m = random_matrix(rng, 2 + rng() % 12, 2 + rng() % 80);
    const Rref rr = rref(m);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      if (i > 0) CHECK(rr.pivots[i - 1] < rr.pivots[i]);
      for (std::size_t r = 0; r < rr.matrix.rows(); ++r) CHECK(rr.matrix.get(r, rr.pivots[i]) == (r == i));
      for (std::size_t c = 0; c < rr.pivots[i]; ++c) CHECK_FALSE(rr.matrix.get(i, c));
    }
    for (std::size_t r = rr.pivots.size(); r < rr.matrix.rows(); ++r) CHECK(rr.matrix.row_is_zero(r));
    // same row space: stacking adds no rank
    CHECK(rank(m.stacked(rr.matrix)) == rr.pivots.size());
  }
}

TEST_CASE("kernel basis spans the null space") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const F2Matrix m = random_matrix(rng, 1 + rng() % 10, 1 + rng() % 70);
    const auto k = kernel_basis(m);
    CHECK(k.size() == m.cols() - rank(m));
    for (const auto& v : k) CHECK((m * v).is_zero());
    if (!k.empty()) CHECK(rank(F2Matrix::from_rows(k, m.cols())) == k.size());
  }
}

TEST_CASE("products") {
  std::mt19937_64 rng(13);
  const F2Matrix a = random_matrix(rng, 7, 66), b = random_matrix(rng, 66, 5), c = random_matrix(rng, 5, 9);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(F2Matrix::identity(66) * b == b);
  F2Vector x(5);
  x.set(1);
  x.set(4);
  CHECK(b * x == (b.column_vector(1) ^ b.column_vector(4)));
  const F2Matrix m = F2Matrix::from_lists({{1, 1, 0}, {0, 1, 1}});
  CHECK(m.select_columns(std::vector<std::size_t>{2, 0}) == F2Matrix::from_lists({{0, 1}, {1, 0}}));
  CHECK(F2Matrix::from_columns({m.column_vector(0), m.column_vector(1), m.column_vector(2)}, 2) == m);
}

}  // TEST_SUITE
