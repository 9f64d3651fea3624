#pragma once

#include <cstddef>
#include <functional>

namespace orbitcalc {

// Process-wide worker count for embarrassingly parallel loops (default 1).
// Every parallel site writes results into per-index slots, so output is
// identical for any setting.
void set_parallel_jobs(int jobs);
int parallel_jobs();

void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace orbitcalc
