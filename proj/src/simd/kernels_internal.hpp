#pragma once

#include "smallcover/simd/kernels.hpp"

namespace smallcover::simd::detail {

// Defined only in the translation units that the build enables for the
// target architecture (see src/CMakeLists.txt).
#if defined(SMALLCOVER_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(SMALLCOVER_HAVE_NEON)
const KernelTable& neon_table();
#endif

}  // namespace smallcover::simd::detail
