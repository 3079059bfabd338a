// Copyright 2026 The isingorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGORDER_COMMON_HPP
#define ISINGORDER_COMMON_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace isingorder {

inline constexpr const char *kVersion = "0.3.0";
inline constexpr double kPi = std::numbers::pi;

/// Thrown for violated preconditions and malformed inputs.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Spin value, +1 (up, Z-eigenvalue +1, computational |0>) or -1.
using Spin = std::int8_t;
using SpinString = std::vector<Spin>;

/// Deterministic 64-bit mixer used to derive independent sub-seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

/// Runs body(i) for i in [0, n) across worker threads. Results must be written
/// to disjoint, index-addressed slots so the output order is deterministic.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body,
                         unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += threads) body(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace isingorder

#endif  // ISINGORDER_COMMON_HPP
