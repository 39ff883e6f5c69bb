#pragma once

#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sympvoa {

// Honors SYMPVOA_THREADS when set; 0/unset leaves the OpenMP default.
inline void configure_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SYMPVOA_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

// Index-parallel loop over [0, n).  The callback must only write state
// owned by its index; callers merge results deterministically afterwards.
template <typename Fn>
void parallel_for(long n, bool parallel, Fn&& fn) {
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < n; ++i) fn(i);
    } else {
        for (long i = 0; i < n; ++i) fn(i);
    }
}

}  // namespace sympvoa
