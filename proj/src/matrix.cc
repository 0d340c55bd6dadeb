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

#include "lcdkit/matrix.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lcdkit/errors.h"

namespace lcdkit {

Matrix::Matrix(FieldSpec field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

Matrix Matrix::identity(FieldSpec field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vector> &rows, size_t cols) {
    if (!rows.empty()) {
        cols = rows[0].size();
    }
    Matrix m(field, 0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

Matrix Matrix::parse(FieldSpec field, const std::vector<std::string_view> &rows) {
    std::vector<Vector> parsed;
    parsed.reserve(rows.size());
    for (auto r : rows) {
        parsed.push_back(parse_vector(field, r));
    }
    return from_rows(field, parsed);
}

void Matrix::append_row(std::span<const Symbol> values) {
    if (values.size() != cols_) {
        throw UsageError("row of length " + std::to_string(values.size()) + " appended to a matrix with " +
                         std::to_string(cols_) + " columns");
    }
    const Field &f = arith();
    for (Symbol s : values) {
        if (!f.valid(s)) {
            throw UsageError("entry " + std::to_string(s) + " is not an element of GF(" +
                             std::to_string(field_.order()) + ")");
        }
    }
    data_.insert(data_.end(), values.begin(), values.end());
    rows_++;
}

void Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

std::string Matrix::to_string() const {
    std::string out;
    for (size_t r = 0; r < rows_; r++) {
        out += format_vector(field_, row(r));
        out += '\n';
    }
    return out;
}

namespace {

// row[dst] += factor * row[src]
void add_scaled_row(Matrix &m, size_t dst, size_t src, Symbol factor) {
    if (factor == 0) {
        return;
    }
    const Field &f = m.arith();
    auto d = m.row(dst);
    auto s = m.row(src);
    for (size_t c = 0; c < m.cols(); c++) {
        d[c] = f.add(d[c], f.mul(factor, s[c]));
    }
}

void scale_row(Matrix &m, size_t r, Symbol factor) {
    const Field &f = m.arith();
    for (auto &x : m.row(r)) {
        x = f.mul(factor, x);
    }
}

// Gauss-Jordan visiting columns in the given order.
std::vector<size_t> eliminate(Matrix &m, std::span<const size_t> column_order) {
    const Field &f = m.arith();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c : column_order) {
        if (r == m.rows()) {
            break;
        }
        size_t p = r;
        while (p < m.rows() && m(p, c) == 0) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(r, p);
        scale_row(m, r, f.inv(m(r, c)));
        for (size_t i = 0; i < m.rows(); i++) {
            if (i != r) {
                add_scaled_row(m, i, r, f.neg(m(i, c)));
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Matrix &m) {
    Matrix work = m;
    std::vector<size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    auto pivots = eliminate(work, order);
    return {std::move(work), std::move(pivots)};
}

size_t rank(const Matrix &m) {
    return rref(m).rank();
}

Matrix row_basis(const Matrix &m) {
    auto r = rref(m);
    Matrix out(m.field(), 0, m.cols());
    for (size_t i = 0; i < r.rank(); i++) {
        out.append_row(r.matrix.row(i));
    }
    return out;
}

bool same_row_space(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols() || a.field() != b.field()) {
        return false;
    }
    return row_basis(a) == row_basis(b);
}

StandardFormResult standard_form(const Matrix &g) {
    const Field &f = g.arith();
    Matrix work = g;
    std::vector<size_t> perm(g.cols());
    std::iota(perm.begin(), perm.end(), 0);
    auto swap_columns = [&](size_t a, size_t b) {
        for (size_t r = 0; r < work.rows(); r++) {
            std::swap(work(r, a), work(r, b));
        }
        std::swap(perm[a], perm[b]);
    };
    for (size_t i = 0; i < work.rows(); i++) {
        std::optional<size_t> pivot_row;
        for (size_t r = i; r < work.rows() && !pivot_row; r++) {
            if (work(r, i) != 0) {
                pivot_row = r;
            }
        }
        if (!pivot_row) {
            // Leftmost later column with a usable pivot.
            for (size_t c = i + 1; c < work.cols() && !pivot_row; c++) {
                for (size_t r = i; r < work.rows(); r++) {
                    if (work(r, c) != 0) {
                        swap_columns(i, c);
                        pivot_row = r;
                        break;
                    }
                }
            }
        }
        if (!pivot_row) {
            // Rows i.. are zero after elimination; row i depends on the rows above it.
            throw RankDeficientError("generator matrix does not have full row rank", i);
        }
        work.swap_rows(i, *pivot_row);
        scale_row(work, i, f.inv(work(i, i)));
        for (size_t r = 0; r < work.rows(); r++) {
            if (r != i) {
                add_scaled_row(work, r, i, f.neg(work(r, i)));
            }
        }
    }
    return {std::move(work), std::move(perm)};
}

Matrix nullspace(const Matrix &m, Flavor flavor) {
    const Matrix &base = flavor == Flavor::Hermitian ? conjugate(m) : m;
    auto r = rref(base);
    const Field &f = m.arith();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    Matrix out(m.field(), 0, m.cols());
    Vector y(m.cols());
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        std::fill(y.begin(), y.end(), 0);
        y[free] = 1;
        for (size_t i = 0; i < r.rank(); i++) {
            y[r.pivots[i]] = f.neg(r.matrix(i, free));
        }
        out.append_row(y);
    }
    return out;
}

Symbol inner_product(FieldSpec field, std::span<const Symbol> x, std::span<const Symbol> y, Flavor flavor) {
    const Field &f = Field::of(field.order());
    Symbol acc = 0;
    if (flavor == Flavor::Hermitian) {
        for (size_t i = 0; i < x.size(); i++) {
            acc = f.add(acc, f.mul(x[i], f.conj(y[i])));
        }
    } else {
        for (size_t i = 0; i < x.size(); i++) {
            acc = f.add(acc, f.mul(x[i], y[i]));
        }
    }
    return acc;
}

Symbol inner_product(FieldSpec field, std::span<const Symbol> x, std::span<const Symbol> y) {
    return inner_product(field, x, y, field.flavor());
}

Matrix gram(const Matrix &g, Flavor flavor) {
    Matrix out(g.field(), g.rows(), g.rows());
    for (size_t i = 0; i < g.rows(); i++) {
        for (size_t j = 0; j < g.rows(); j++) {
            out(i, j) = inner_product(g.field(), g.row(i), g.row(j), flavor);
        }
    }
    return out;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows() || a.field() != b.field()) {
        throw UsageError("matrix shapes or fields do not match for multiplication");
    }
    const Field &f = a.arith();
    Matrix out(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t t = 0; t < a.cols(); t++) {
            Symbol x = a(i, t);
            if (x == 0) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix &m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

Matrix conjugate(const Matrix &m) {
    Matrix out = m;
    const Field &f = m.arith();
    for (size_t i = 0; i < m.rows(); i++) {
        for (auto &x : out.row(i)) {
            x = f.conj(x);
        }
    }
    return out;
}

Matrix vstack(const Matrix &top, const Matrix &bottom) {
    if (top.cols() != bottom.cols() || top.field() != bottom.field()) {
        throw UsageError("cannot stack matrices with different widths or fields");
    }
    Matrix out = top;
    for (size_t r = 0; r < bottom.rows(); r++) {
        out.append_row(bottom.row(r));
    }
    return out;
}

Matrix select_columns(const Matrix &m, std::span<const size_t> cols) {
    Matrix out(m.field(), m.rows(), cols.size());
    for (size_t j = 0; j < cols.size(); j++) {
        if (cols[j] >= m.cols()) {
            throw UsageError("column index " + std::to_string(cols[j]) + " out of range");
        }
        for (size_t i = 0; i < m.rows(); i++) {
            out(i, j) = m(i, cols[j]);
        }
    }
    return out;
}

Matrix delete_columns(const Matrix &m, std::span<const size_t> cols) {
    std::vector<bool> drop(m.cols(), false);
    for (size_t c : cols) {
        if (c >= m.cols()) {
            throw UsageError("coordinate " + std::to_string(c) + " out of range for length " +
                             std::to_string(m.cols()));
        }
        drop[c] = true;
    }
    std::vector<size_t> keep;
    for (size_t c = 0; c < m.cols(); c++) {
        if (!drop[c]) {
            keep.push_back(c);
        }
    }
    return select_columns(m, keep);
}

Matrix permute_columns(const Matrix &m, std::span<const size_t> permutation) {
    if (permutation.size() != m.cols()) {
        throw UsageError("permutation length does not match the number of columns");
    }
    return select_columns(m, permutation);
}

Matrix intersect_row_spaces(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols() || a.field() != b.field()) {
        throw UsageError("row spaces live in different ambient spaces");
    }
    const size_t n = a.cols();
    Matrix block(a.field(), a.rows() + b.rows(), 2 * n);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < n; j++) {
            block(i, j) = a(i, j);
            block(i, n + j) = a(i, j);
        }
    }
    for (size_t i = 0; i < b.rows(); i++) {
        for (size_t j = 0; j < n; j++) {
            block(a.rows() + i, j) = b(i, j);
        }
    }
    auto r = rref(block);
    Matrix out(a.field(), 0, n);
    for (size_t i = 0; i < r.rank(); i++) {
        if (r.pivots[i] < n) {
            continue;
        }
        out.append_row(r.matrix.row(i).subspan(n));
    }
    return row_basis(out);
}

Vector combine(const Matrix &m, std::span<const Symbol> coeffs) {
    const Field &f = m.arith();
    Vector out(m.cols(), 0);
    for (size_t i = 0; i < m.rows(); i++) {
        if (coeffs[i] == 0) {
            continue;
        }
        auto r = m.row(i);
        for (size_t j = 0; j < m.cols(); j++) {
            out[j] = f.add(out[j], f.mul(coeffs[i], r[j]));
        }
    }
    return out;
}

std::optional<Vector> solve_left(const Matrix &m, std::span<const Symbol> v) {
    // u m = v  <=>  m^T u^T = v^T; eliminate on [m^T | v].
    const size_t k = m.rows();
    Matrix aug(m.field(), m.cols(), k + 1);
    for (size_t j = 0; j < m.cols(); j++) {
        for (size_t i = 0; i < k; i++) {
            aug(j, i) = m(i, j);
        }
        aug(j, k) = v[j];
    }
    auto r = rref(aug);
    Vector u(k, 0);
    for (size_t i = 0; i < r.rank(); i++) {
        if (r.pivots[i] == k) {
            return std::nullopt;
        }
        u[r.pivots[i]] = r.matrix(i, k);
    }
    return u;
}

Matrix congruence_orthonormalize(const Matrix &m) {
    if (m.field().order() != 2) {
        throw UsageError("congruence orthonormalization is only defined over GF(2)");
    }
    const size_t k = m.rows();
    if (m.cols() != k) {
        throw UsageError("symmetric form must be square");
    }
    if (transpose(m) != m) {
        throw UsageError("form is not symmetric");
    }
    if (rank(m) != k) {
        throw UsageError("form is singular");
    }
    auto form = [&](const Vector &u, const Vector &v) {
        Symbol acc = 0;
        for (size_t i = 0; i < k; i++) {
            if (!u[i]) {
                continue;
            }
            for (size_t j = 0; j < k; j++) {
                acc ^= static_cast<Symbol>(v[j] & m(i, j));
            }
        }
        return acc;
    };
    auto add_to = [](Vector &dst, const Vector &src) {
        for (size_t i = 0; i < dst.size(); i++) {
            dst[i] ^= src[i];
        }
    };

    std::vector<Vector> done;
    std::vector<Vector> rest;
    for (size_t i = 0; i < k; i++) {
        Vector e(k, 0);
        e[i] = 1;
        rest.push_back(std::move(e));
    }
    while (!rest.empty()) {
        auto it = std::find_if(rest.begin(), rest.end(), [&](const Vector &v) { return form(v, v) == 1; });
        if (it != rest.end()) {
            Vector s = *it;
            rest.erase(it);
            for (auto &t : rest) {
                if (form(t, s)) {
                    add_to(t, s);
                }
            }
            done.push_back(std::move(s));
            continue;
        }
        // The remaining form is alternating. Without an earlier unit vector there is nothing to repair with.
        if (done.empty()) {
            throw NotOrthonormalizableError("form is alternating (all diagonal entries zero); no orthonormal basis");
        }
        Vector s = rest.front();
        auto partner = std::find_if(rest.begin() + 1, rest.end(), [&](const Vector &v) { return form(s, v) == 1; });
        if (partner == rest.end()) {
            throw std::logic_error("alternating residual form is degenerate");
        }
        Vector t = *partner;
        rest.erase(partner);
        rest.erase(rest.begin());
        for (auto &u : rest) {
            Symbol us = form(u, s);
            Symbol ut = form(u, t);
            if (ut) {
                add_to(u, s);
            }
            if (us) {
                add_to(u, t);
            }
        }
        // r + hyperbolic pair (s, t) -> three orthonormal vectors r+s, r+t, r+s+t.
        Vector r = done.back();
        done.pop_back();
        Vector a = r, b = r, c = r;
        add_to(a, s);
        add_to(b, t);
        add_to(c, s);
        add_to(c, t);
        done.push_back(std::move(a));
        done.push_back(std::move(b));
        done.push_back(std::move(c));
    }
    Matrix u = Matrix::from_rows(m.field(), done);
    if (multiply(multiply(u, m), transpose(u)) != Matrix::identity(m.field(), k)) {
        throw std::logic_error("orthonormalization produced a non-identity form");
    }
    return u;
}

size_t hamming_weight(std::span<const Symbol> v) {
    return static_cast<size_t>(std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

Vector parse_vector(FieldSpec field, std::string_view text) {
    Vector out;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')') {
            continue;
        }
        auto s = parse_symbol(field.order(), c);
        if (!s) {
            throw ParseError(std::string("symbol '") + c + "' is not in the " + field.tag() + " alphabet");
        }
        out.push_back(*s);
    }
    return out;
}

std::string format_vector(FieldSpec field, std::span<const Symbol> v) {
    std::string out;
    out.reserve(v.size());
    for (Symbol s : v) {
        out += symbol_char(field.order(), s);
    }
    return out;
}

}  // namespace lcdkit
