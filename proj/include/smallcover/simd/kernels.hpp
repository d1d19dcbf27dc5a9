#pragma once

// Bit-vector inner loops shared by all GF(2) code.
//
// Every kernel exists as a portable scalar reference and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is
// chosen once at runtime from the CPU feature bits; tests run every compiled
// variant against the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace smallcover::simd {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

struct KernelTable {
  std::string_view name;
  /// dst[i] ^= src[i] for i < words.
  void (*xor_into)(Word* dst, const Word* src, std::size_t words);
  /// Number of set bits.
  std::size_t (*popcount)(const Word* src, std::size_t words);
  bool (*is_zero)(const Word* src, std::size_t words);
  /// Parity of popcount(a & b), i.e. the GF(2) dot product.
  bool (*and_parity)(const Word* a, const Word* b, std::size_t words);
};

const KernelTable& scalar_kernels();

/// nullptr unless compiled in and supported by the running CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best table for this machine. Thread-safe; resolved on first use.
const KernelTable& active_kernels();

/// Pin the active table (benchmarks and tests). Not for concurrent use.
void force_kernels(const KernelTable& table);
void reset_kernels();

// Rows shorter than one vector register skip the indirect call.
inline constexpr std::size_t kShortRowWords = 4;

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = dst.size();
  if (n < kShortRowWords) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  active_kernels().xor_into(dst.data(), src.data(), n);
}

inline std::size_t popcount(std::span<const Word> src) {
  if (src.size() < kShortRowWords) {
    std::size_t c = 0;
    for (Word w : src) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  return active_kernels().popcount(src.data(), src.size());
}

inline bool is_zero(std::span<const Word> src) {
  if (src.size() < kShortRowWords) {
    Word acc = 0;
    for (Word w : src) acc |= w;
    return acc == 0;
  }
  return active_kernels().is_zero(src.data(), src.size());
}

inline bool and_parity(std::span<const Word> a, std::span<const Word> b) {
  if (a.size() < kShortRowWords) {
    Word acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
    return (__builtin_popcountll(acc) & 1) != 0;
  }
  return active_kernels().and_parity(a.data(), b.data(), a.size());
}

}  // namespace smallcover::simd
