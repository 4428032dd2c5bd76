#pragma once
// Per-ISA kernel tables; each is defined in its own translation unit so the
// ISA-specific compile flags stay local.

#include "tvc/kernels.hpp"

namespace tvc::kernels::detail {

extern const KernelTable scalar_table;
#if defined(TVC_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(TVC_HAVE_NEON)
extern const KernelTable neon_table;
#endif

}  // namespace tvc::kernels::detail
