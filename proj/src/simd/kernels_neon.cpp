// aarch64 only. NEON is mandatory on that architecture, so no runtime probe.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace smallcover::simd::detail {
namespace {

constexpr std::size_t kLane = 2;  // 64-bit words per uint64x2_t

void xor_into_neon(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t popcount_neon(const Word* src, std::size_t words) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(src + i)));
    c += vaddvq_u8(bytes);
  }
  for (; i < words; ++i) c += static_cast<std::size_t>(__builtin_popcountll(src[i]));
  return c;
}

bool is_zero_neon(const Word* src, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) acc = vorrq_u64(acc, vld1q_u64(src + i));
  Word tail = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
  for (; i < words; ++i) tail |= src[i];
  return tail == 0;
}

bool and_parity_neon(const Word* a, const Word* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  Word fold = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
  for (; i < words; ++i) fold ^= a[i] & b[i];
  return (__builtin_popcountll(fold) & 1) != 0;
}

constexpr KernelTable kNeon{"neon", xor_into_neon, popcount_neon, is_zero_neon, and_parity_neon};

}  // namespace

const KernelTable& neon_table() { return kNeon; }

}  // namespace smallcover::simd::detail
