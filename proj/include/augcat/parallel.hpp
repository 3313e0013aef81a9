/* Deterministic work splitting: results are always assembled by index, so
 * any jobs count produces identical output. */

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace augcat {

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn)
{
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    unsigned workers = jobs < n ? jobs : static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace augcat
