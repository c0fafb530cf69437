// Copyright 2026 The blockge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace blockge::detail {

/// BLOCKGE_THREADS when set to a positive integer, else the hardware count.
inline std::size_t default_thread_count() {
    if(const char* env = std::getenv("BLOCKGE_THREADS")) {
        try {
            const long v = std::stol(env);
            if(v > 0)
                return static_cast<std::size_t>(v);
        } catch(...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers. If any call
/// throws, the exception from the lowest index is rethrown after all
/// workers stop, so failures are reported deterministically.
template <class Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
    if(threads == 0)
        threads = default_thread_count();
    threads = std::min(threads, n);
    if(threads <= 1) {
        for(std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = n;
    std::exception_ptr failure;
    auto worker = [&] {
        for(;;) {
            const std::size_t i = next.fetch_add(1);
            if(i >= n)
                return;
            {
                std::lock_guard lock(mu);
                if(i > failed_at)
                    return;
            }
            try {
                fn(i);
            } catch(...) {
                std::lock_guard lock(mu);
                if(i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for(std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for(auto& th : pool)
        th.join();
    if(failure)
        std::rethrow_exception(failure);
}

} // namespace blockge::detail
