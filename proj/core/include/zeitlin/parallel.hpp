#pragma once

#include <cstddef>
#include <functional>

namespace zeitlin {

/// Cap the worker threads used by RHS kernels and report sweeps.
/// n <= 0 restores the default (all available cores).
void set_max_parallelism(int n);
int max_parallelism();

/// Run body(i) for i in [0, n). Each index must be independent; results do
/// not depend on scheduling because every output is reduced sequentially
/// inside its own body call.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace zeitlin
