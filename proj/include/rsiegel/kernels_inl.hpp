#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsiegel::kernels {

template <class Fn>
void parallel_for(long n, bool allow_parallel, Fn&& fn) {
#ifdef _OPENMP
  if (allow_parallel && n > 1 && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)allow_parallel;
#endif
  for (long i = 0; i < n; ++i) fn(i);
}

}  // namespace rsiegel::kernels
