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

#include "lcdkit/code.h"

#include <algorithm>
#include <stdexcept>

#include "lcdkit/errors.h"

namespace lcdkit {

LinearCode LinearCode::from_generator(Matrix generator) {
    if (generator.rows() == 0 || generator.cols() == 0) {
        throw UsageError("generator matrix is empty");
    }
    if (generator.rows() > generator.cols()) {
        throw RankDeficientError("generator has more rows (" + std::to_string(generator.rows()) +
                                     ") than columns (" + std::to_string(generator.cols()) + ")",
                                 generator.cols());
    }
    if (rank(generator) != generator.rows()) {
        Matrix prefix(generator.field(), 0, generator.cols());
        for (size_t r = 0; r < generator.rows(); r++) {
            prefix.append_row(generator.row(r));
            if (rank(prefix) != r + 1) {
                throw RankDeficientError("generator row " + std::to_string(r + 1) +
                                             " is a linear combination of the rows above it",
                                         r);
            }
        }
    }
    return LinearCode(std::move(generator));
}

LinearCode LinearCode::zero(FieldSpec field, size_t n) {
    return LinearCode(Matrix(field, 0, n));
}

LinearCode dual(const LinearCode &c) {
    if (c.dimension() == 0) {
        return LinearCode::from_generator(Matrix::identity(c.field(), c.length()));
    }
    Matrix h = nullspace(c.generator(), c.field().flavor());
    if (h.rows() == 0) {
        return LinearCode::zero(c.field(), c.length());
    }
    return LinearCode::from_generator(std::move(h));
}

HullInfo hull(const LinearCode &c) {
    if (c.dimension() == 0) {
        return {Matrix(c.field(), 0, c.length()), 0, {}};
    }
    size_t dim = c.dimension() - rank(gram(c.generator(), c.field().flavor()));
    LinearCode d = dual(c);
    Matrix basis = d.dimension() == 0 ? Matrix(c.field(), 0, c.length())
                                      : intersect_row_spaces(c.generator(), d.generator());
    if (basis.rows() != dim) {
        throw std::logic_error("hull dimension from the Gram rank (" + std::to_string(dim) +
                               ") disagrees with the row-space intersection (" + std::to_string(basis.rows()) + ")");
    }
    std::vector<size_t> pivots = rref(basis).pivots;
    return {std::move(basis), dim, std::move(pivots)};
}

bool is_lcd(const LinearCode &c) {
    return rank(gram(c.generator(), c.field().flavor())) == c.dimension();
}

namespace {

std::vector<size_t> checked_set(std::span<const size_t> t, size_t n) {
    std::vector<size_t> out(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && out.back() >= n) {
        throw UsageError("coordinate " + std::to_string(out.back() + 1) + " out of range for length " +
                         std::to_string(n));
    }
    return out;
}

}  // namespace

LinearCode shorten(const LinearCode &c, std::span<const size_t> t) {
    auto set = checked_set(t, c.length());
    if (set.size() >= c.length()) {
        throw EmptyCodeError("shortening on every coordinate leaves nothing");
    }
    // u G vanishes on T exactly when u is in the left kernel of G restricted to T.
    Matrix restricted = select_columns(c.generator(), set);
    Matrix kernel = nullspace(transpose(restricted), Flavor::Euclidean);
    if (kernel.rows() == 0) {
        throw EmptyCodeError("no nonzero codeword vanishes on the shortening set");
    }
    return LinearCode::from_generator(delete_columns(multiply(kernel, c.generator()), set));
}

LinearCode puncture(const LinearCode &c, std::span<const size_t> t) {
    auto set = checked_set(t, c.length());
    if (set.size() >= c.length()) {
        throw EmptyCodeError("puncturing on every coordinate leaves nothing");
    }
    Matrix cut = delete_columns(c.generator(), set);
    if (rank(cut) == cut.rows()) {
        return LinearCode::from_generator(std::move(cut));
    }
    Matrix kept(c.field(), 0, cut.cols());
    for (size_t r = 0; r < cut.rows(); r++) {
        Matrix trial = kept;
        trial.append_row(cut.row(r));
        if (rank(trial) == trial.rows()) {
            kept = std::move(trial);
        }
    }
    if (kept.rows() == 0) {
        throw EmptyCodeError("puncturing removed every nonzero codeword");
    }
    return LinearCode::from_generator(std::move(kept));
}

bool is_even_like(const LinearCode &c) {
    if (c.field().order() != 2) {
        throw UsageError("even-like is only defined for binary codes");
    }
    for (size_t r = 0; r < c.dimension(); r++) {
        if (hamming_weight(c.generator().row(r)) % 2 != 0) {
            return false;
        }
    }
    return true;
}

bool same_code(const LinearCode &a, const LinearCode &b) {
    return a.field() == b.field() && a.length() == b.length() && a.dimension() == b.dimension() &&
           same_row_space(a.generator(), b.generator());
}

std::vector<std::uint64_t> macwilliams_binary(std::span<const std::uint64_t> counts, size_t k) {
    if (counts.empty() || counts.size() > 61) {
        throw UsageError("MacWilliams transform supports lengths 0..60");
    }
    const size_t n = counts.size() - 1;
    std::vector<std::vector<__int128>> binom(n + 1, std::vector<__int128>(n + 1, 0));
    for (size_t i = 0; i <= n; i++) {
        binom[i][0] = 1;
        for (size_t j = 1; j <= i; j++) {
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
        }
    }
    std::vector<std::uint64_t> out(n + 1, 0);
    for (size_t j = 0; j <= n; j++) {
        __int128 acc = 0;
        for (size_t i = 0; i <= n; i++) {
            if (counts[i] == 0) {
                continue;
            }
            __int128 kraw = 0;
            for (size_t s = 0; s <= std::min(i, j); s++) {
                if (j - s > n - i) {
                    continue;
                }
                __int128 term = binom[i][s] * binom[n - i][j - s];
                kraw += (s % 2 == 0) ? term : -term;
            }
            acc += static_cast<__int128>(counts[i]) * kraw;
        }
        __int128 denom = static_cast<__int128>(1) << k;
        if (acc < 0 || acc % denom != 0) {
            throw std::logic_error("MacWilliams transform produced a non-integral count");
        }
        out[j] = static_cast<std::uint64_t>(acc / denom);
    }
    return out;
}

}  // namespace lcdkit
