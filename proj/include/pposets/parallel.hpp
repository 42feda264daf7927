#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace pposets {

// Splits [0, total) into at most `jobs` contiguous chunks and runs
// fn(begin, end, chunk_index) on each, one thread per chunk.  Callers keep
// determinism by writing into per-chunk slots and merging in chunk order.
template <class Fn>
void run_chunked(std::size_t total, int jobs, Fn&& fn) {
    std::size_t workers = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
    if (workers > total)
        workers = total == 0 ? 1 : total;
    if (workers <= 1) {
        fn(std::size_t{0}, total, std::size_t{0});
        return;
    }
    std::vector<std::thread> threads;
    std::size_t base = total / workers, extra = total % workers, begin = 0;
    for (std::size_t c = 0; c < workers; ++c) {
        std::size_t end = begin + base + (c < extra ? 1 : 0);
        threads.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
        begin = end;
    }
    for (auto& t : threads)
        t.join();
}

}  // namespace pposets
