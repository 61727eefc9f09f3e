#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace involute {

// Execution policy for the data-parallel kernels. Serial is the reference
// implementation; Parallel uses OpenMP when compiled in and falls back to
// the serial loop otherwise. Both paths must produce identical results.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#if defined(_OPENMP)
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// Runs fn(i) for i in [0, n). The parallel path is only taken when it can
// help and when we are not already inside a parallel region.
template <class F>
void exec_for(Exec exec, std::size_t n, F&& fn) {
#if defined(_OPENMP)
    if (exec == Exec::Parallel && n > 1 && !omp_in_parallel()) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace involute
