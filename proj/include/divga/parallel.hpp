#pragma once

#include <cstddef>
#include <functional>

namespace divga {

/// Resolves a worker-count request: values >= 1 are taken as-is, anything
/// else means host parallelism.
int effective_workers(int requested);

/// Runs body(i) for i in [0, count) on a small thread pool with dynamic
/// scheduling. Exceptions from workers are rethrown on the calling thread.
/// Callers are responsible for making bodies independent; determinism of the
/// overall result must come from indexing, not scheduling.
void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& body);

} // namespace divga
