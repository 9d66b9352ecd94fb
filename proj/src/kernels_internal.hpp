#pragma once

// Internal linkage between the per-ISA kernel translation units and the
// dispatcher. Not installed; include only from src/.

#include "rep/kernels.hpp"

namespace rep::kern {

namespace scalar {
extern const KernelTable kTable;
}

#if REP_KERNELS_AVX2
namespace avx2 {
extern const KernelTable kTable;
}
#endif

} // namespace rep::kern
