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

#ifndef LCDKIT_CODE_H
#define LCDKIT_CODE_H

#include <cstdint>
#include <span>
#include <vector>

#include "lcdkit/matrix.h"

namespace lcdkit {

/// A k-dimensional subspace of F_q^n given by a full-rank k x n generator matrix.
class LinearCode {
   public:
    /// Validates full row rank. The matrix is stored as given.
    /// Throws UsageError for an empty matrix and RankDeficientError naming the first row in the span of the
    /// rows above it.
    static LinearCode from_generator(Matrix generator);
    /// The zero-dimensional code of length n (only produced as an output, e.g. the dual of the universe code).
    static LinearCode zero(FieldSpec field, size_t n);

    FieldSpec field() const {
        return generator_.field();
    }
    size_t length() const {
        return generator_.cols();
    }
    size_t dimension() const {
        return generator_.rows();
    }
    const Matrix &generator() const {
        return generator_;
    }

   private:
    explicit LinearCode(Matrix g) : generator_(std::move(g)) {
    }
    Matrix generator_;
};

struct HullInfo {
    /// RREF basis of C intersected with its dual.
    Matrix basis;
    size_t dim;
    /// Pivot columns of `basis`, increasing.
    std::vector<size_t> pivot_set;
};

/// Dual under the flavor of the code's field.
LinearCode dual(const LinearCode &c);
/// Throws std::logic_error if the Gram rank and the row-space intersection disagree.
HullInfo hull(const LinearCode &c);
bool is_lcd(const LinearCode &c);

/// Codewords vanishing on T, with T deleted. Throws EmptyCodeError when no nonzero codeword survives.
LinearCode shorten(const LinearCode &c, std::span<const size_t> t);
/// Deletes T from every codeword. Throws EmptyCodeError when the result is the zero space.
LinearCode puncture(const LinearCode &c, std::span<const size_t> t);

/// Binary only: every generator row has even weight. Throws UsageError otherwise.
bool is_even_like(const LinearCode &c);

/// Same field, length and row space.
bool same_code(const LinearCode &a, const LinearCode &b);

/// Weight distribution of the dual of a binary [n,k] code with distribution `counts` (A_0..A_n).
/// Exact integer arithmetic; n <= 60.
std::vector<std::uint64_t> macwilliams_binary(std::span<const std::uint64_t> counts, size_t k);

}  // namespace lcdkit

#endif
