// Copyright 2026 The lcdkit Authors
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

#ifndef LCDKIT_ENUMERATE_H
#define LCDKIT_ENUMERATE_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcdkit/code.h"

namespace lcdkit {

enum class Strategy { Exhaustive, BrouwerZimmermann };

struct EnumerationOptions {
    /// Work budget: codewords for Exhaustive, generator combinations for Brouwer-Zimmermann.
    /// Unset means the field default (2^26, 3^16, 4^13).
    std::optional<std::uint64_t> cap;
    /// 0 means std::thread::hardware_concurrency(). Results never depend on this.
    unsigned threads = 0;
};

std::uint64_t default_cap(FieldSpec field);
unsigned resolve_threads(unsigned threads);

/// A distance together with how much of it is proven. When `exact` is false, `value` is an upper bound
/// (the lightest codeword found) and `lower` the best proven lower bound.
struct Distance {
    int value = 0;
    bool exact = false;
    int lower = 0;

    bool operator==(const Distance &) const = default;
};

/// Never throws for budget reasons; reports what it managed. Lengths up to 512.
Distance estimate_min_weight(const LinearCode &c, Strategy strategy, const EnumerationOptions &opts = {});
/// Exact minimum nonzero weight. Throws BudgetExceededError when the cap is hit before exactness.
int min_weight(const LinearCode &c, Strategy strategy, const EnumerationOptions &opts = {});

struct WeightDistribution {
    /// counts[i] = number of codewords of weight i, i = 0..n.
    std::vector<std::uint64_t> counts;
    int min_weight = 0;
    /// Binary only: some codeword has odd weight. Always false for other fields.
    bool odd_like = false;
};

/// Throws BudgetExceededError if q^k exceeds the cap.
WeightDistribution weight_distribution(const LinearCode &c, const EnumerationOptions &opts = {});

/// min over c in C of wt(v + c), or nullopt as soon as some coset word of weight < abort_below is seen
/// (abort_below = 0 never aborts). Throws BudgetExceededError if q^k exceeds the cap.
std::optional<int> coset_min_weight(const LinearCode &c, std::span<const Symbol> v, int abort_below,
                                    const EnumerationOptions &opts = {});

}  // namespace lcdkit

#endif
