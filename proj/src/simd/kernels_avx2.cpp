// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace smallcover::simd::detail {
namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per __m256i

void xor_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

// Nibble lookup popcount (Mula, Kurz, Lemire).
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::size_t horizontal_sum_epi64(__m256i acc) {
  alignas(32) std::uint64_t lanes[kLane];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount_avx2(const Word* src, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), zero));
  }
  std::size_t c = horizontal_sum_epi64(acc);
  for (; i < words; ++i) c += static_cast<std::size_t>(__builtin_popcountll(src[i]));
  return c;
}

bool is_zero_avx2(const Word* src, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
  }
  Word tail = 0;
  for (; i < words; ++i) tail |= src[i];
  return tail == 0 && _mm256_testz_si256(acc, acc) != 0;
}

bool and_parity_avx2(const Word* a, const Word* b, std::size_t words) {
  // XOR-folding a & b keeps the parity of its popcount.
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
  }
  alignas(32) std::uint64_t lanes[kLane];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Word fold = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < words; ++i) fold ^= a[i] & b[i];
  return (__builtin_popcountll(fold) & 1) != 0;
}

constexpr KernelTable kAvx2{"avx2", xor_into_avx2, popcount_avx2, is_zero_avx2, and_parity_avx2};

}  // namespace

const KernelTable& avx2_table() { return kAvx2; }

}  // namespace smallcover::simd::detail
