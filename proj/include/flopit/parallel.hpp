#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flopit {

/// Worker count to use for a request; 0 means every available thread.
inline int resolve_workers(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

inline bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

} // namespace flopit
