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


#include <atomic>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "isingorder/common.hpp"

using namespace isingorder;

TEST(common, splitmix64_reference_stream) {
    // First three outputs of the reference generator seeded with 0.
    std::uint64_t state = 0;
    std::vector<std::uint64_t> got;
    for (int k = 0; k < 3; ++k) {
        got.push_back(splitmix64(state));
        state += 0x9e3779b97f4a7c15ULL;
    }
    EXPECT_EQ(got[0], 0xe220a8397b1dcdafULL);
    EXPECT_EQ(got[1], 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(got[2], 0x06c45d188009454fULL);
}

TEST(common, derive_seed_separates_streams) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 0; a < 50; ++a)
        for (std::uint64_t b = 0; b < 50; ++b) seen.insert(derive_seed(42, a, b));
    EXPECT_EQ(seen.size(), 2500u);
    EXPECT_EQ(derive_seed(7, 3, 1), derive_seed(7, 3, 1));
    EXPECT_NE(derive_seed(7, 3, 1), derive_seed(8, 3, 1));
}

TEST(common, parallel_for_visits_every_index_once) {
    for (unsigned threads : {1u, 2u, 5u, 0u}) {
        std::vector<std::atomic<int>> hits(257);
        parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; }, threads);
        for (const auto &h : hits) ASSERT_EQ(h.load(), 1);
    }
    parallel_for(0, [](std::size_t) { FAIL(); }, 4);
}

TEST(common, parallel_for_propagates_exceptions) {
    EXPECT_THROW(parallel_for(
                     64, [](std::size_t i) { if (i == 37) throw Error("boom"); }, 3),
                 Error);
}
