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

#ifndef LCDKIT_MATRIX_H
#define LCDKIT_MATRIX_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/gf.h"

namespace lcdkit {

using Vector = std::vector<Symbol>;

/// Dense row-major matrix over one of the supported fields.
class Matrix {
   public:
    Matrix(FieldSpec field, size_t rows, size_t cols);

    static Matrix identity(FieldSpec field, size_t n);
    /// Validates every entry; all rows must have equal length. `cols` is used when `rows` is empty.
    static Matrix from_rows(FieldSpec field, const std::vector<Vector> &rows, size_t cols = 0);
    /// Rows written in the text alphabet of the field, e.g. {"1101", "0111"}. Whitespace is ignored.
    static Matrix parse(FieldSpec field, const std::vector<std::string_view> &rows);

    FieldSpec field() const {
        return field_;
    }
    const Field &arith() const {
        return Field::of(field_.order());
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return rows_ == 0;
    }

    Symbol operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    Symbol &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    std::span<const Symbol> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Symbol> row(size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_vector(size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }

    void append_row(std::span<const Symbol> values);
    void swap_rows(size_t a, size_t b);

    /// One line per row, symbols concatenated.
    std::string to_string() const;

    bool operator==(const Matrix &other) const = default;

   private:
    FieldSpec field_;
    size_t rows_;
    size_t cols_;
    std::vector<Symbol> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<size_t> pivots;

    size_t rank() const {
        return pivots.size();
    }
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape is unchanged.
RrefResult rref(const Matrix &m);
size_t rank(const Matrix &m);
/// Nonzero rows of the RREF: the canonical basis of the row space.
Matrix row_basis(const Matrix &m);
bool same_row_space(const Matrix &a, const Matrix &b);

struct StandardFormResult {
    /// (I_k | A).
    Matrix matrix;
    /// column_permutation[j] is the input column that ends up at position j.
    std::vector<size_t> column_permutation;
};

/// Throws RankDeficientError when `g` does not have full row rank.
StandardFormResult standard_form(const Matrix &g);

/// Basis of {y : <row_i(m), y> = 0 for all i} under `flavor`; dimension cols - rank.
Matrix nullspace(const Matrix &m, Flavor flavor);

/// Entry (i, j) is <row_i, row_j> under `flavor`.
Matrix gram(const Matrix &g, Flavor flavor);

/// For a symmetric nonsingular GF(2) matrix with a nonzero diagonal entry, an invertible U with U M U^T = I.
/// Throws NotOrthonormalizableError for alternating forms and UsageError for inputs outside the domain.
Matrix congruence_orthonormalize(const Matrix &m);

Symbol inner_product(FieldSpec field, std::span<const Symbol> x, std::span<const Symbol> y);
/// Inner product taken with the flavor of `field`.
Symbol inner_product(FieldSpec field, std::span<const Symbol> x, std::span<const Symbol> y, Flavor flavor);

Matrix multiply(const Matrix &a, const Matrix &b);
Matrix transpose(const Matrix &m);
Matrix conjugate(const Matrix &m);
Matrix vstack(const Matrix &top, const Matrix &bottom);
Matrix select_columns(const Matrix &m, std::span<const size_t> cols);
/// Drops the listed columns (which need not be sorted).
Matrix delete_columns(const Matrix &m, std::span<const size_t> cols);
/// Applies a column permutation in the StandardFormResult convention.
Matrix permute_columns(const Matrix &m, std::span<const size_t> permutation);

/// Basis (in RREF) of rowspace(a) intersected with rowspace(b), by the Zassenhaus sum/intersection method.
Matrix intersect_row_spaces(const Matrix &a, const Matrix &b);

/// Linear combination sum_i coeffs[i] * row_i(m).
Vector combine(const Matrix &m, std::span<const Symbol> coeffs);
/// Coefficients u with u * m = v, if v lies in the row space of m (rows of m independent).
std::optional<Vector> solve_left(const Matrix &m, std::span<const Symbol> v);

size_t hamming_weight(std::span<const Symbol> v);
Vector parse_vector(FieldSpec field, std::string_view text);
std::string format_vector(FieldSpec field, std::span<const Symbol> v);

}  // namespace lcdkit

#endif
