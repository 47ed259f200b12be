#include "nsimplex/parallel.hpp"

#include <algorithm>

namespace nsimplex {

int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::uint64_t count, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, int)>& body) {
    int workers = effective_threads(threads);
    if (count == 0) return;
    std::uint64_t min_chunk = 1024;
    std::uint64_t n_chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers),
                                                     (count + min_chunk - 1) / min_chunk);
    if (n_chunks <= 1) {
        body(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_chunks));
    std::uint64_t per = count / n_chunks, rem = count % n_chunks, begin = 0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        std::uint64_t len = per + (c < rem ? 1 : 0);
        pool.emplace_back(body, begin, begin + len, static_cast<int>(c));
        begin += len;
    }
    for (auto& t : pool) t.join();
}

} // namespace nsimplex
