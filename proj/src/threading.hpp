#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indsat::detail {

inline int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested <= 0 ? omp_get_max_threads() : requested;
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace indsat::detail
