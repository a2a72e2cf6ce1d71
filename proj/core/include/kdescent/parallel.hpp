#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace kdescent {

/// 0 means one worker per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into at most `jobs` contiguous chunks and runs
/// body(worker, begin, end) for each; chunk i always covers the same range
/// for a given (count, jobs), so results merged in worker order are stable.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned jobs, Body&& body) {
    const unsigned workers = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_jobs(jobs), count)));
    if (workers == 1) {
        body(0u, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::uint64_t step = count / workers;
    const std::uint64_t extra = count % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + step + (w < extra ? 1 : 0);
        threads.emplace_back([&body, w, begin, end] { body(w, begin, end); });
        begin = end;
    }
}

} // namespace kdescent
