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

#ifndef LCDKIT_CONSTRUCT_H
#define LCDKIT_CONSTRUCT_H

#include <cstdint>
#include <vector>

#include "lcdkit/code.h"
#include "lcdkit/enumerate.h"

namespace lcdkit {

/// M1 borders the generator: (1 x; 0 G). M2 stacks a new row: (y; G).
enum class Method { M1, M2 };

/// M1: weight even over GF(2) and Hermitian GF(4), weight not 2 mod 3 over GF(3).
/// M2: weight odd over GF(2) and Hermitian GF(4), weight not 0 mod 3 over GF(3).
/// Euclidean GF(4) has no such condition and raises UsageError.
bool satisfies_weight_condition(FieldSpec field, size_t weight, Method method);

/// A vector of the dual of a code that meets the weight condition of its method.
class ExtensionVector {
   public:
    /// Throws NotInDualError or WeightConditionError.
    static ExtensionVector make(const LinearCode &c, Vector v, Method method);

    const Vector &vector() const {
        return vector_;
    }
    Method method() const {
        return method_;
    }
    size_t weight() const {
        return weight_;
    }
    /// M1 with x = 0: valid, but the result has minimum weight 1.
    bool degenerate() const {
        return method_ == Method::M1 && weight_ == 0;
    }

   private:
    ExtensionVector(Vector v, Method m, size_t w) : vector_(std::move(v)), method_(m), weight_(w) {
    }
    Vector vector_;
    Method method_;
    size_t weight_;
};

/// (1 x; 0 G) and (y; G) without any checks.
Matrix bordered_generator(const LinearCode &c, std::span<const Symbol> x);
Matrix stacked_generator(const LinearCode &c, std::span<const Symbol> y);

/// C must be LCD (PreconditionError otherwise). The result is checked to be LCD.
LinearCode extend_m1(const LinearCode &c, const ExtensionVector &x);
LinearCode extend_m2(const LinearCode &c, const ExtensionVector &y);

/// Appends a zero coordinate.
LinearCode pad_zero_column(const LinearCode &c);

struct LcdReduction {
    LinearCode code;
    /// Removed coordinates, 0-based, increasing.
    std::vector<size_t> coordinates;
};

/// Shortens on the pivot set of the hull: an [n-l, k-l] LCD code with d >= d(C).
/// Throws EmptyCodeError when C is self-orthogonal (k = l).
LcdReduction shorten_to_lcd(const LinearCode &c);
/// Punctures on the pivot set of the hull of the dual: an [n-l, k] LCD code with d >= d(C) - l.
/// Requires l < d(C) (PreconditionError); d(C) is computed exactly within `opts`.
LcdReduction puncture_to_lcd(const LinearCode &c, const EnumerationOptions &opts = {});

struct Split {
    Vector in_code;
    Vector in_dual;
};

/// v = c + h with c in C and h in the dual. C must be LCD.
Split project_split(std::span<const Symbol> v, const LinearCode &c);

struct Decomposition {
    /// Coordinate of C' that was shortened (0-based).
    size_t coordinate;
    /// C' shortened on `coordinate`: LCD of dimension k-1.
    LinearCode base;
    Vector x;
    /// extend_m1(base, x). Equals C' with `coordinate` moved to the front.
    LinearCode rebuilt;
};

/// Binary odd-like LCD code with k >= 2. Scans coordinates in increasing order and takes the first
/// whose shortening is LCD of dimension k-1. Throws NotDecomposableError if none does.
Decomposition decompose_m1(const LinearCode &c);

/// Moves coordinate i to position 0, keeping the order of the others.
LinearCode move_to_front(const LinearCode &c, size_t i);

struct SearchOptions {
    Method method = Method::M1;
    /// Stop once this distance is reached. 0 means only the best possible, d(C), stops the search early.
    int target = 0;
    /// Candidates considered. The whole dual is scanned when q^(n-k) <= budget.
    std::uint64_t budget = 1u << 20;
    std::uint64_t seed = 0;
    EnumerationOptions enumeration;
};

struct SearchResult {
    Vector vector;
    LinearCode code;
    int distance;
    bool exhaustive;
    std::uint64_t candidates;
    bool target_reached;
};

/// Best extension by exact minimum distance, ties to the lexicographically smallest vector.
/// Throws NoCandidateError if no dual vector meets the weight condition and BudgetExceededError if
/// candidates cannot be evaluated exactly.
SearchResult search_extend(const LinearCode &c, const SearchOptions &opts);

/// Minimum distance of the extension by v, computed from cosets of C; nullopt once it is known to be
/// below `abort_below`. d(C) must be supplied.
std::optional<int> extension_distance(const LinearCode &c, int d_c, std::span<const Symbol> v, Method method,
                                      int abort_below, const EnumerationOptions &opts = {});

}  // namespace lcdkit

#endif
