#ifndef IZETA_PARALLEL_HPP
#define IZETA_PARALLEL_HPP

#include <functional>

namespace izeta {

// Process-wide worker cap (CLI --jobs). Results never depend on the worker
// count: callers collect per-index results and reduce in index order.
void set_worker_count(int n);
int worker_count();

void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace izeta

#endif
