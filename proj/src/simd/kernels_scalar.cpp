#include "smallcover/simd/kernels.hpp"

namespace smallcover::simd {
namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t popcount_scalar(const Word* src, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) {
    c += static_cast<std::size_t>(__builtin_popcountll(src[i]));
  }
  return c;
}

bool is_zero_scalar(const Word* src, std::size_t words) {
  Word acc = 0;
  for (std::size_t i = 0; i < words; ++i) acc |= src[i];
  return acc == 0;
}

bool and_parity_scalar(const Word* a, const Word* b, std::size_t words) {
  Word acc = 0;
  for (std::size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
  return (__builtin_popcountll(acc) & 1) != 0;
}

constexpr KernelTable kScalar{
    "scalar", xor_into_scalar, popcount_scalar, is_zero_scalar, and_parity_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace smallcover::simd
