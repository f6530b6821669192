/**************************************************************************
 * combinations.hpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace tgrs {

/// C(n, k) with C(n, k) = 0 for k > n. Saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/**
 * k-subsets of {0, ..., n-1} in colexicographic order, each sorted
 * ascending. The first subset is {0, ..., k-1}.
 *
 *     for (Combinations c(n, k); c.valid(); c.next()) use(c.indices());
 */
class Combinations {
public:
    Combinations(std::size_t n, std::size_t k) : n_(n), idx_(k), valid_(k <= n) {
        std::iota(idx_.begin(), idx_.end(), std::size_t{0});
    }

    bool valid() const noexcept { return valid_; }
    std::span<const std::size_t> indices() const noexcept { return idx_; }

    void next() noexcept {
        const std::size_t k = idx_.size();
        std::size_t i = 0;
        while (i < k && idx_[i] + 1 == (i + 1 < k ? idx_[i + 1] : n_)) ++i;
        if (i == k) {
            valid_ = false;
            return;
        }
        ++idx_[i];
        for (std::size_t j = 0; j < i; ++j) idx_[j] = j;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> idx_;
    bool valid_;
};

/// Position of a sorted subset in colexicographic order: sum of C(c_i, i+1).
std::uint64_t colex_rank(std::span<const std::size_t> sorted_subset) noexcept;

}  // namespace tgrs
