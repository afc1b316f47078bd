#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degseq {

// Thread count resolution: explicit argument > DEGSEQ_THREADS env > OpenMP
// default.  Every parallel kernel in the library is deterministic in its
// result regardless of the value returned here.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DEGSEQ_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace degseq
