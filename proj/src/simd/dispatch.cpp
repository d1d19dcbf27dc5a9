#include <atomic>

#include "kernels_internal.hpp"

namespace smallcover::simd {
namespace {

const KernelTable* detect() {
  if (const KernelTable* t = neon_kernels()) return t;
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> active{detect()};
  return active;
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(SMALLCOVER_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(SMALLCOVER_HAVE_NEON)
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() { return *slot().load(std::memory_order_acquire); }

void force_kernels(const KernelTable& table) { slot().store(&table, std::memory_order_release); }

void reset_kernels() { slot().store(detect(), std::memory_order_release); }

}  // namespace smallcover::simd
