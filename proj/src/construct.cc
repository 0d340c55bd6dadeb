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

#include "lcdkit/construct.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lcdkit/errors.h"

namespace lcdkit {

bool satisfies_weight_condition(FieldSpec field, size_t weight, Method method) {
    if (field.order() == 4 && !field.hermitian()) {
        throw UsageError("extension weight conditions are defined for GF(2), GF(3) and Hermitian GF(4) only");
    }
    if (field.order() == 3) {
        return method == Method::M1 ? weight % 3 != 2 : weight % 3 != 0;
    }
    return method == Method::M1 ? weight % 2 == 0 : weight % 2 == 1;
}

namespace {

const char *method_name(Method m) {
    return m == Method::M1 ? "Method 1" : "Method 2";
}

void require_lcd(const LinearCode &c, const char *what) {
    if (!is_lcd(c)) {
        throw PreconditionError(std::string(what) + " requires an LCD code");
    }
}

bool in_dual(const LinearCode &c, std::span<const Symbol> v) {
    for (size_t r = 0; r < c.dimension(); r++) {
        if (inner_product(c.field(), c.generator().row(r), v) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

ExtensionVector ExtensionVector::make(const LinearCode &c, Vector v, Method method) {
    if (v.size() != c.length()) {
        throw UsageError("extension vector has length " + std::to_string(v.size()) + ", code length is " +
                         std::to_string(c.length()));
    }
    const Field &f = Field::of(c.field().order());
    for (Symbol s : v) {
        if (!f.valid(s)) {
            throw UsageError("extension vector entry outside the field");
        }
    }
    if (!in_dual(c, v)) {
        throw NotInDualError("vector " + format_vector(c.field(), v) + " is not in the dual of the code");
    }
    size_t w = hamming_weight(v);
    if (!satisfies_weight_condition(c.field(), w, method)) {
        throw WeightConditionError("vector of weight " + std::to_string(w) + " violates the " + method_name(method) +
                                   " weight condition over " + c.field().tag());
    }
    return ExtensionVector(std::move(v), method, w);
}

Matrix bordered_generator(const LinearCode &c, std::span<const Symbol> x) {
    const size_t n = c.length();
    Matrix g(c.field(), c.dimension() + 1, n + 1);
    g(0, 0) = 1;
    for (size_t j = 0; j < n; j++) {
        g(0, j + 1) = x[j];
    }
    for (size_t r = 0; r < c.dimension(); r++) {
        for (size_t j = 0; j < n; j++) {
            g(r + 1, j + 1) = c.generator()(r, j);
        }
    }
    return g;
}

Matrix stacked_generator(const LinearCode &c, std::span<const Symbol> y) {
    Matrix g(c.field(), 0, c.length());
    g.append_row(y);
    return vstack(g, c.generator());
}

LinearCode extend_m1(const LinearCode &c, const ExtensionVector &x) {
    if (x.method() != Method::M1) {
        throw UsageError("extend_m1 needs a Method 1 vector");
    }
    require_lcd(c, "Method 1");
    LinearCode out = LinearCode::from_generator(bordered_generator(c, x.vector()));
    if (!is_lcd(out)) {
        throw std::logic_error("Method 1 extension is not LCD although its conditions hold");
    }
    return out;
}

LinearCode extend_m2(const LinearCode &c, const ExtensionVector &y) {
    if (y.method() != Method::M2) {
        throw UsageError("extend_m2 needs a Method 2 vector");
    }
    require_lcd(c, "Method 2");
    LinearCode out = LinearCode::from_generator(stacked_generator(c, y.vector()));
    if (!is_lcd(out)) {
        throw std::logic_error("Method 2 extension is not LCD although its conditions hold");
    }
    return out;
}

LinearCode pad_zero_column(const LinearCode &c) {
    Matrix g(c.field(), c.dimension(), c.length() + 1);
    for (size_t r = 0; r < c.dimension(); r++) {
        for (size_t j = 0; j < c.length(); j++) {
            g(r, j) = c.generator()(r, j);
        }
    }
    return LinearCode::from_generator(std::move(g));
}

LcdReduction shorten_to_lcd(const LinearCode &c) {
    HullInfo h = hull(c);
    if (h.dim == 0) {
        return {c, {}};
    }
    if (h.dim == c.dimension()) {
        throw EmptyCodeError("the code is self-orthogonal; shortening on its hull leaves nothing");
    }
    LinearCode out = shorten(c, h.pivot_set);
    if (out.dimension() != c.dimension() - h.dim || !is_lcd(out)) {
        throw std::logic_error("shortening on the hull pivots did not give an LCD code of dimension k-l");
    }
    return {std::move(out), std::move(h.pivot_set)};
}

LcdReduction puncture_to_lcd(const LinearCode &c, const EnumerationOptions &opts) {
    HullInfo h = hull(dual(c));
    if (h.dim == 0) {
        return {c, {}};
    }
    int d = min_weight(c, Strategy::BrouwerZimmermann, opts);
    if (static_cast<int>(h.dim) >= d) {
        throw PreconditionError("hull dimension " + std::to_string(h.dim) + " is not below the minimum distance " +
                                std::to_string(d));
    }
    LinearCode out = puncture(c, h.pivot_set);
    if (out.dimension() != c.dimension() || !is_lcd(out)) {
        throw std::logic_error("puncturing on the dual hull pivots did not give an LCD code of dimension k");
    }
    return {std::move(out), std::move(h.pivot_set)};
}

Split project_split(std::span<const Symbol> v, const LinearCode &c) {
    if (v.size() != c.length()) {
        throw UsageError("vector length does not match the code length");
    }
    require_lcd(c, "the direct-sum split");
    LinearCode d = dual(c);
    Matrix both = vstack(c.generator(), d.generator());
    auto coeffs = solve_left(both, v);
    if (!coeffs) {
        throw std::logic_error("code and dual do not span the ambient space");
    }
    const size_t k = c.dimension();
    Vector a(coeffs->begin(), coeffs->begin() + static_cast<std::ptrdiff_t>(k));
    Vector b(coeffs->begin() + static_cast<std::ptrdiff_t>(k), coeffs->end());
    Split s{combine(c.generator(), a), combine(d.generator(), b)};
    return s;
}

LinearCode move_to_front(const LinearCode &c, size_t i) {
    if (i >= c.length()) {
        throw UsageError("coordinate out of range");
    }
    std::vector<size_t> order{i};
    for (size_t j = 0; j < c.length(); j++) {
        if (j != i) {
            order.push_back(j);
        }
    }
    return LinearCode::from_generator(permute_columns(c.generator(), order));
}

Decomposition decompose_m1(const LinearCode &c) {
    if (c.field().order() != 2) {
        throw UsageError("the Method 1 decomposition is implemented for binary codes");
    }
    if (c.dimension() < 2) {
        throw PreconditionError("decomposition needs k >= 2");
    }
    require_lcd(c, "decomposition");
    if (is_even_like(c)) {
        throw PreconditionError("decomposition needs an odd-like code");
    }
    const Matrix &g = c.generator();
    for (size_t i = 0; i < c.length(); i++) {
        size_t lead = g.rows();
        for (size_t r = 0; r < g.rows() && lead == g.rows(); r++) {
            if (g(r, i) != 0) {
                lead = r;
            }
        }
        if (lead == g.rows()) {
            continue;  // zero coordinate: shortening keeps dimension k
        }
        std::vector<size_t> t{i};
        LinearCode base = shorten(c, t);
        if (!is_lcd(base)) {
            continue;
        }
        Vector residual;
        for (size_t j = 0; j < c.length(); j++) {
            if (j != i) {
                residual.push_back(g(lead, j));
            }
        }
        Vector x = project_split(residual, base).in_dual;
        ExtensionVector ev = ExtensionVector::make(base, x, Method::M1);
        LinearCode rebuilt = extend_m1(base, ev);
        if (!same_code(rebuilt, move_to_front(c, i))) {
            throw std::logic_error("re-extension does not reproduce the input code");
        }
        return {i, std::move(base), std::move(x), std::move(rebuilt)};
    }
    throw NotDecomposableError("no coordinate gives an LCD shortening of dimension k-1");
}

std::optional<int> extension_distance(const LinearCode &c, int d_c, std::span<const Symbol> v, Method method,
                                      int abort_below, const EnumerationOptions &opts) {
    if (d_c < abort_below) {
        return std::nullopt;
    }
    if (method == Method::M1) {
        auto m = coset_min_weight(c, v, std::max(0, abort_below - 1), opts);
        if (!m) {
            return std::nullopt;
        }
        return std::min(d_c, 1 + *m);
    }
    auto m = coset_min_weight(c, v, std::max(0, abort_below), opts);
    if (!m) {
        return std::nullopt;
    }
    return std::min(d_c, *m);
}

SearchResult search_extend(const LinearCode &c, const SearchOptions &opts) {
    require_lcd(c, "extension search");
    const FieldSpec field = c.field();
    const int q = field.order();
    const size_t n = c.length();
    const int d_c = min_weight(c, Strategy::BrouwerZimmermann, opts.enumeration);
    LinearCode d = dual(c);
    // In RREF, codewords sort lexicographically in the same order as their coefficient vectors.
    const Matrix h = d.dimension() == 0 ? Matrix(field, 0, n) : row_basis(d.generator());
    const size_t r = h.rows();

    std::uint64_t space = 1;
    bool exhaustive = true;
    for (size_t i = 0; i < r; i++) {
        if (space > opts.budget / static_cast<std::uint64_t>(q)) {
            exhaustive = false;
            break;
        }
        space *= static_cast<std::uint64_t>(q);
    }
    if (space > opts.budget) {
        exhaustive = false;
    }

    std::vector<Vector> sampled;
    if (!exhaustive) {
        std::mt19937_64 rng(opts.seed);
        sampled.reserve(std::min<std::uint64_t>(opts.budget, 1u << 20));
        for (std::uint64_t i = 0; i < opts.budget; i++) {
            Vector u(r);
            for (auto &x : u) {
                x = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(q));
            }
            sampled.push_back(std::move(u));
        }
        std::sort(sampled.begin(), sampled.end());
        sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());
    }

    const int goal = opts.target > 0 ? std::min(opts.target, d_c) : d_c;
    int best = 0;
    std::optional<Vector> best_vector;
    std::uint64_t considered = 0;

    auto consider = [&](const Vector &u) {
        Vector v = combine(h, u);
        if (!satisfies_weight_condition(field, hamming_weight(v), opts.method)) {
            return false;
        }
        considered++;
        // Ties lose: candidates arrive in lexicographic order.
        auto dist = extension_distance(c, d_c, v, opts.method, best_vector ? best + 1 : 0, opts.enumeration);
        if (dist && (!best_vector || *dist > best)) {
            best = *dist;
            best_vector = std::move(v);
        }
        return best_vector && best >= goal;
    };

    if (exhaustive) {
        Vector u(r, 0);
        while (!consider(u)) {
            bool wrapped = true;
            for (size_t j = r; j > 0 && wrapped; j--) {
                wrapped = ++u[j - 1] == q;
                if (wrapped) {
                    u[j - 1] = 0;
                }
            }
            if (wrapped) {
                break;
            }
        }
    } else {
        for (const auto &u : sampled) {
            if (consider(u)) {
                break;
            }
        }
    }
    if (!best_vector) {
        throw NoCandidateError("no dual vector satisfies the " + std::string(method_name(opts.method)) +
                               " weight condition");
    }
    ExtensionVector ev = ExtensionVector::make(c, *best_vector, opts.method);
    LinearCode code = opts.method == Method::M1 ? extend_m1(c, ev) : extend_m2(c, ev);
    return {*best_vector, std::move(code), best, exhaustive, considered, opts.target > 0 && best >= opts.target};
}

}  // namespace lcdkit
