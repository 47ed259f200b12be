#ifndef NSIMPLEX_PARALLEL_HPP
#define NSIMPLEX_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace nsimplex {

/// Effective worker count: `requested` if positive, otherwise the hardware
/// concurrency (at least 1).
int effective_threads(int requested);

/// Splits [0, count) into contiguous chunks and runs `body(begin, end, chunk)`
/// on each, possibly concurrently. Results must be combined by the caller in
/// chunk order so that the outcome is independent of the thread count.
void parallel_chunks(std::uint64_t count, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, int)>& body);

} // namespace nsimplex

#endif
