#include <doctest.h>

#include <random>
#include <vector>

#include "smallcover/f2linalg.hpp"
#include "smallcover/simd/kernels.hpp"

using namespace smallcover;
using simd::Word;

namespace {

std::vector<const simd::KernelTable*> variants() {
  std::vector<const simd::KernelTable*> v;
  if (auto* t = simd::avx2_kernels()) v.push_back(t);
  if (auto* t = simd::neon_kernels()) v.push_back(t);
  return v;
}

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::vector<Word> w(n);
  std::bernoulli_distribution sparse(density);
  for (auto& x : w) x = sparse(rng) ? rng() : 0;
  return w;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("every compiled variant agrees with the scalar kernels") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  MESSAGE("active kernels: " << simd::active_kernels().name << ", variants: " << variants().size());
  for (const auto* var : variants()) {
    // lengths straddle the vector width and the unrolled tail
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 127, 130}) {
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_words(rng, n, rep % 3 == 0 ? 0.05 : 0.6);
        const auto b = random_words(rng, n);
        auto d1 = a, d2 = a;
        ref.xor_into(d1.data(), b.data(), n);
        var->xor_into(d2.data(), b.data(), n);
        CHECK(d1 == d2);
        CHECK(ref.popcount(a.data(), n) == var->popcount(a.data(), n));
        CHECK(ref.is_zero(a.data(), n) == var->is_zero(a.data(), n));
        CHECK(ref.and_parity(a.data(), b.data(), n) == var->and_parity(a.data(), b.data(), n));
      }
      std::vector<Word> z(n, 0);
      CHECK(var->is_zero(z.data(), n));
      if (n > 0) {
        z[n - 1] = Word{1} << 63;
        CHECK_FALSE(var->is_zero(z.data(), n));
      }
    }
  }
}

TEST_CASE("scalar kernels match a bit-by-bit definition") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 3, 6}) {
    const auto a = random_words(rng, n);
    const auto b = random_words(rng, n);
    std::size_t pop = 0;
    bool par = false;
    for (std::size_t i = 0; i < n * 64; ++i) {
      const bool x = (a[i / 64] >> (i % 64)) & 1U;
      const bool y = (b[i / 64] >> (i % 64)) & 1U;
      pop += x;
      par ^= x && y;
    }
    CHECK(ref.popcount(a.data(), n) == pop);
    CHECK(ref.and_parity(a.data(), b.data(), n) == par);
  }
}

TEST_CASE("linear algebra results do not depend on the kernel table") {
  std::mt19937_64 rng(3);
  F2Matrix m(90, 300);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (rng() % 5 == 0) m.set(r, c);
  // rows 60.. are sums of earlier rows
  for (std::size_t r = 60; r < 90; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, false);
    m.xor_row(r, r - 60);
    m.xor_row(r, r - 59);
  }
  simd::force_kernels(simd::scalar_kernels());
  const Rref a = rref(m);
  const auto ka = kernel_basis(m);
  simd::reset_kernels();
  for (const auto* var : variants()) {
    simd::force_kernels(*var);
    const Rref b = rref(m);
    CHECK(a.matrix == b.matrix);
    CHECK(a.pivots == b.pivots);
    CHECK(ka == kernel_basis(m));
    simd::reset_kernels();
  }
  CHECK(a.pivots.size() == 60);
}

}  // TEST_SUITE
