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

#include "lcdkit/enumerate.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <limits>
#include <thread>

#include "lcdkit/errors.h"
#include "packed.h"

namespace lcdkit {

std::uint64_t default_cap(FieldSpec field) {
    switch (field.order()) {
        case 2:
            return std::uint64_t{1} << 26;
        case 3:
            return 43046721;  // 3^16
        default:
            return std::uint64_t{1} << 26;  // 4^13
    }
}

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) {
        return threads;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

using packed::Vec;

constexpr std::uint64_t kBzDefaultCap = std::uint64_t{1} << 32;
constexpr size_t kMaxLength = 512;

// Runs fn(i) for i in [0, tasks) on up to `threads` workers. Order of execution is unspecified, so callers
// store per-task results and reduce them in index order.
template <class Fn>
void parallel_for(size_t tasks, unsigned threads, Fn &&fn) {
    threads = static_cast<unsigned>(std::min<size_t>(threads, tasks));
    if (threads <= 1) {
        for (size_t i = 0; i < tasks; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

// Saturating base^m.
std::uint64_t power(std::uint64_t base, size_t m) {
    std::uint64_t r = 1;
    for (size_t i = 0; i < m; i++) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

// The code as the span of `gens` with digits in 0..base-1 (base 2: GF(2)-span, base 3: GF(3)-span).
// GF(4) codes are the GF(2)-span of {g, w g} over generator rows g.
template <int W>
struct SpanSet {
    std::vector<Vec<W>> gens;
    int base;
};

template <int W>
SpanSet<W> span_set(const LinearCode &c) {
    SpanSet<W> s;
    const Matrix &g = c.generator();
    const Field &f = g.arith();
    s.base = c.field().order() == 3 ? 3 : 2;
    Vector scaled(g.cols());
    for (size_t r = 0; r < g.rows(); r++) {
        s.gens.push_back(packed::pack<W>(g.row(r)));
        if (c.field().order() == 4) {
            for (size_t j = 0; j < g.cols(); j++) {
                scaled[j] = f.mul(2, g(r, j));
            }
            s.gens.push_back(packed::pack<W>(scaled));
        }
    }
    return s;
}

// Visits cur + every combination of gens[0..low). Stops early when visit returns false.
template <class K, int W, class Visit>
bool visit_block(const std::vector<Vec<W>> &gens, int base, size_t low, Vec<W> cur, Visit &visit) {
    if (!visit(cur)) {
        return false;
    }
    if (base == 2) {
        const std::uint64_t total = std::uint64_t{1} << low;
        for (std::uint64_t t = 1; t < total; t++) {
            K::add(cur, gens[std::countr_zero(t)]);
            if (!visit(cur)) {
                return false;
            }
        }
        return true;
    }
    std::vector<std::uint8_t> digit(low, 0);
    while (true) {
        size_t j = 0;
        for (; j < low; j++) {
            K::add(cur, gens[j]);
            if (++digit[j] < base) {
                break;
            }
            digit[j] = 0;
        }
        if (j == low) {
            return true;
        }
        if (!visit(cur)) {
            return false;
        }
    }
}

// Splits the digits into `low` enumerated ones and a prefix that indexes independent chunks.
struct Chunking {
    size_t low;
    size_t prefix;
    std::uint64_t chunks;
};

// Small spans run as one chunk on the calling thread; spawning workers would dominate.
constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 16;

Chunking chunking(size_t digits, int base) {
    size_t prefix = 0;
    std::uint64_t chunks = 1;
    const bool split = power(static_cast<std::uint64_t>(base), digits) >= kParallelThreshold;
    while (split && prefix < digits && chunks < 512) {
        prefix++;
        chunks *= static_cast<std::uint64_t>(base);
    }
    return {digits - prefix, prefix, chunks};
}

template <class K, int W>
Vec<W> chunk_start(const std::vector<Vec<W>> &gens, int base, const Chunking &ch, std::uint64_t chunk, Vec<W> start) {
    for (size_t i = 0; i < ch.prefix; i++) {
        int d = static_cast<int>(chunk % static_cast<std::uint64_t>(base));
        chunk /= static_cast<std::uint64_t>(base);
        for (int t = 0; t < d; t++) {
            K::add(start, gens[ch.low + i]);
        }
    }
    return start;
}

struct MinResult {
    int value = INT_MAX;
    bool stopped = false;
};

// Minimum weight over start + span(gens[0..digits)). Stops once some weight <= stop_at.
template <class K, int W>
MinResult min_over_span(const std::vector<Vec<W>> &gens, int base, size_t digits, Vec<W> start, bool skip_zero,
                        int stop_at, unsigned threads) {
    Chunking ch = chunking(digits, base);
    if (ch.chunks == 1) {
        threads = 1;
    }
    std::vector<int> local(ch.chunks, INT_MAX);
    std::atomic<bool> stop{false};
    parallel_for(ch.chunks, threads, [&](size_t chunk) {
        if (stop.load(std::memory_order_relaxed)) {
            return;
        }
        int best = INT_MAX;
        std::uint32_t tick = 0;
        auto visit = [&](const Vec<W> &v) {
            int w = K::weight(v);
            if (w == 0 && skip_zero) {
                return true;
            }
            if (w < best) {
                best = w;
                if (w <= stop_at) {
                    stop.store(true, std::memory_order_relaxed);
                    return false;
                }
            }
            if ((++tick & 0xFFF) == 0 && stop.load(std::memory_order_relaxed)) {
                return false;
            }
            return true;
        };
        visit_block<K, W>(gens, base, ch.low, chunk_start<K, W>(gens, base, ch, chunk, start), visit);
        local[chunk] = best;
    });
    MinResult r;
    for (int v : local) {
        r.value = std::min(r.value, v);
    }
    r.stopped = stop.load();
    return r;
}

template <class K, int W>
Distance exhaustive(const LinearCode &c, std::uint64_t cap, unsigned threads) {
    SpanSet<W> s = span_set<W>(c);
    const size_t digits = s.gens.size();
    const bool complete = power(static_cast<std::uint64_t>(s.base), digits) <= cap;
    size_t used = digits;
    if (!complete) {
        used = 0;
        while (used < digits && power(static_cast<std::uint64_t>(s.base), used + 1) <= cap) {
            used++;
        }
    }
    MinResult r = min_over_span<K, W>(s.gens, s.base, used, Vec<W>{}, true, 1, threads);
    int best = r.value;
    for (const auto &g : s.gens) {
        best = std::min(best, K::weight(g));
    }
    if (complete || best == 1) {
        return {best, true, best};
    }
    return {best, false, 1};
}

// Information sets for Brouwer-Zimmermann: successive reduced generators whose pivots avoid the columns
// claimed by earlier sets.
struct InfoSet {
    Matrix g;
    size_t rank;
};

std::vector<InfoSet> information_sets(const Matrix &g) {
    const Field &f = g.arith();
    std::vector<bool> used(g.cols(), false);
    std::vector<InfoSet> sets;
    while (true) {
        Matrix work = g;
        size_t r = 0;
        std::vector<size_t> pivots;
        for (size_t c = 0; c < g.cols() && r < work.rows(); c++) {
            if (used[c]) {
                continue;
            }
            size_t p = r;
            while (p < work.rows() && work(p, c) == 0) {
                p++;
            }
            if (p == work.rows()) {
                continue;
            }
            work.swap_rows(r, p);
            Symbol inv = f.inv(work(r, c));
            for (auto &x : work.row(r)) {
                x = f.mul(inv, x);
            }
            for (size_t i = 0; i < work.rows(); i++) {
                Symbol factor = work(i, c);
                if (i == r || factor == 0) {
                    continue;
                }
                Symbol neg = f.neg(factor);
                for (size_t j = 0; j < work.cols(); j++) {
                    work(i, j) = f.add(work(i, j), f.mul(neg, work(r, j)));
                }
            }
            pivots.push_back(c);
            r++;
        }
        if (r == 0) {
            break;
        }
        for (size_t c : pivots) {
            used[c] = true;
        }
        sets.push_back({std::move(work), r});
    }
    return sets;
}

std::uint64_t binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    __int128 r = 1;
    for (size_t i = 1; i <= k; i++) {
        r = r * static_cast<__int128>(n - k + i) / static_cast<__int128>(i);
        if (r > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max())) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

template <class K, int W>
Distance brouwer_zimmermann(const LinearCode &c, std::uint64_t cap, unsigned threads) {
    const size_t k = c.dimension();
    const int q = c.field().order();
    const Field &f = Field::of(q);
    auto sets = information_sets(c.generator());

    // multiples[j][i][a-1] = a * row_i of information set j.
    std::vector<std::vector<std::vector<Vec<W>>>> multiples(sets.size());
    int upper = INT_MAX;
    Vector scaled(c.length());
    for (size_t j = 0; j < sets.size(); j++) {
        multiples[j].resize(k);
        for (size_t i = 0; i < k; i++) {
            for (int a = 1; a < q; a++) {
                for (size_t t = 0; t < c.length(); t++) {
                    scaled[t] = f.mul(static_cast<Symbol>(a), sets[j].g(i, t));
                }
                multiples[j][i].push_back(packed::pack<W>(scaled));
            }
            int w = K::weight(multiples[j][i][0]);
            if (w > 0) {
                upper = std::min(upper, w);
            }
        }
    }

    std::uint64_t spent = 0;
    int lower = 1;
    for (size_t w = 1; w <= k; w++) {
        const std::uint64_t per_set = saturating_mul(binomial(k, w), power(static_cast<std::uint64_t>(q - 1), w - 1));
        for (size_t j = 0; j < sets.size(); j++) {
            if (per_set > cap || spent > cap - per_set) {
                return {upper, false, lower};
            }
            spent += per_set;
            const auto &mult = multiples[j];
            const int floor = lower;
            std::vector<int> local(k, INT_MAX);
            std::atomic<bool> stop{false};
            // Task i enumerates the combinations whose first row is i, with that coefficient fixed to 1.
            parallel_for(k - w + 1, per_set < kParallelThreshold ? 1u : threads, [&](size_t first) {
                int best = INT_MAX;
                std::vector<Vec<W>> partial(w + 1);
                partial[1] = mult[first][0];
                // Iterative DFS over (row, coefficient) choices for depths 2..w.
                std::vector<size_t> row(w + 1);
                std::vector<int> coef(w + 1);
                row[1] = first;
                if (w == 1) {
                    int wt = K::weight(partial[1]);
                    local[first] = wt;
                    return;
                }
                row[2] = first;
                coef[2] = q - 1;
                size_t depth = 2;
                std::uint32_t tick = 0;
                while (depth >= 2) {
                    // Advance the choice at `depth`.
                    if (coef[depth] < q - 1) {
                        coef[depth]++;
                    } else {
                        row[depth]++;
                        coef[depth] = 1;
                        if (row[depth] > k - 1 - (w - depth)) {
                            depth--;
                            continue;
                        }
                    }
                    partial[depth] = partial[depth - 1];
                    K::add(partial[depth], mult[row[depth]][coef[depth] - 1]);
                    if (depth == w) {
                        int wt = K::weight(partial[depth]);
                        if (wt < best) {
                            best = wt;
                            if (wt <= floor) {
                                stop.store(true, std::memory_order_relaxed);
                                break;
                            }
                        }
                        if ((++tick & 0xFFF) == 0 && stop.load(std::memory_order_relaxed)) {
                            break;
                        }
                    } else {
                        depth++;
                        row[depth] = row[depth - 1];
                        coef[depth] = q - 1;
                    }
                }
                local[first] = best;
            });
            for (int v : local) {
                upper = std::min(upper, v);
            }
            if (upper <= lower) {
                return {upper, true, upper};
            }
        }
        int bound = 0;
        for (const auto &s : sets) {
            long long contrib = static_cast<long long>(w) + 1 - static_cast<long long>(k - s.rank);
            bound += static_cast<int>(std::max(0LL, contrib));
        }
        lower = std::max(lower, bound);
        if (lower >= upper || w == k) {
            return {upper, true, upper};
        }
    }
    return {upper, true, upper};
}

template <class K, int W>
WeightDistribution distribution(const LinearCode &c, unsigned threads) {
    SpanSet<W> s = span_set<W>(c);
    Chunking ch = chunking(s.gens.size(), s.base);
    const size_t n = c.length();
    std::vector<std::vector<std::uint64_t>> local(ch.chunks);
    parallel_for(ch.chunks, threads, [&](size_t chunk) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        auto visit = [&](const Vec<W> &v) {
            counts[K::weight(v)]++;
            return true;
        };
        visit_block<K, W>(s.gens, s.base, ch.low, chunk_start<K, W>(s.gens, s.base, ch, chunk, Vec<W>{}), visit);
        local[chunk] = std::move(counts);
    });
    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (const auto &l : local) {
        for (size_t i = 0; i <= n; i++) {
            out.counts[i] += l[i];
        }
    }
    for (size_t i = 1; i <= n; i++) {
        if (out.counts[i] != 0) {
            out.min_weight = static_cast<int>(i);
            break;
        }
    }
    if (c.field().order() == 2) {
        for (size_t i = 1; i <= n; i += 2) {
            out.odd_like = out.odd_like || out.counts[i] != 0;
        }
    }
    return out;
}

template <class Fn>
auto dispatch(const LinearCode &c, Fn &&fn) {
    const size_t words = (c.length() + 63) / 64;
    auto by_field = [&]<int W>() {
        switch (c.field().order()) {
            case 2:
                return fn.template operator()<packed::Binary, W>();
            case 3:
                return fn.template operator()<packed::Ternary, W>();
            default:
                return fn.template operator()<packed::Quaternary, W>();
        }
    };
    if (words <= 1) {
        return by_field.template operator()<1>();
    }
    if (words <= 2) {
        return by_field.template operator()<2>();
    }
    if (words <= 4) {
        return by_field.template operator()<4>();
    }
    if (c.length() <= kMaxLength) {
        return by_field.template operator()<8>();
    }
    throw UsageError("weight enumeration supports lengths up to " + std::to_string(kMaxLength));
}

void require_nonzero(const LinearCode &c) {
    if (c.dimension() == 0) {
        throw EmptyCodeError("the zero code has no nonzero codewords");
    }
}

std::uint64_t exhaustive_work(const LinearCode &c) {
    return power(static_cast<std::uint64_t>(c.field().order()), c.dimension());
}

}  // namespace

Distance estimate_min_weight(const LinearCode &c, Strategy strategy, const EnumerationOptions &opts) {
    require_nonzero(c);
    const unsigned threads = resolve_threads(opts.threads);
    if (strategy == Strategy::Exhaustive) {
        const std::uint64_t cap = opts.cap.value_or(default_cap(c.field()));
        return dispatch(c, [&]<class K, int W>() { return exhaustive<K, W>(c, cap, threads); });
    }
    const std::uint64_t cap = opts.cap.value_or(kBzDefaultCap);
    return dispatch(c, [&]<class K, int W>() { return brouwer_zimmermann<K, W>(c, cap, threads); });
}

int min_weight(const LinearCode &c, Strategy strategy, const EnumerationOptions &opts) {
    Distance d = estimate_min_weight(c, strategy, opts);
    if (!d.exact) {
        throw BudgetExceededError("minimum weight not determined within the work cap; best found d <= " +
                                      std::to_string(d.value) + ", proven d >= " + std::to_string(d.lower),
                                  d.value, d.lower);
    }
    return d.value;
}

WeightDistribution weight_distribution(const LinearCode &c, const EnumerationOptions &opts) {
    const std::uint64_t cap = opts.cap.value_or(default_cap(c.field()));
    if (exhaustive_work(c) > cap) {
        Distance d = estimate_min_weight(c, Strategy::Exhaustive, opts);
        throw BudgetExceededError("weight distribution needs " + std::to_string(c.field().order()) + "^" +
                                      std::to_string(c.dimension()) + " codewords, above the cap of " +
                                      std::to_string(cap),
                                  d.value, d.lower);
    }
    const unsigned threads = resolve_threads(opts.threads);
    if (c.dimension() == 0) {
        WeightDistribution out;
        out.counts.assign(c.length() + 1, 0);
        out.counts[0] = 1;
        return out;
    }
    return dispatch(c, [&]<class K, int W>() { return distribution<K, W>(c, threads); });
}

std::optional<int> coset_min_weight(const LinearCode &c, std::span<const Symbol> v, int abort_below,
                                    const EnumerationOptions &opts) {
    if (v.size() != c.length()) {
        throw UsageError("coset representative has length " + std::to_string(v.size()) + ", code length is " +
                         std::to_string(c.length()));
    }
    if (c.dimension() == 0) {
        int w = static_cast<int>(hamming_weight(v));
        if (w < abort_below) {
            return std::nullopt;
        }
        return w;
    }
    const std::uint64_t cap = opts.cap.value_or(default_cap(c.field()));
    if (exhaustive_work(c) > cap) {
        throw BudgetExceededError("coset enumeration exceeds the work cap", static_cast<int>(hamming_weight(v)), 0);
    }
    const unsigned threads = resolve_threads(opts.threads);
    MinResult r = dispatch(c, [&]<class K, int W>() {
        SpanSet<W> s = span_set<W>(c);
        return min_over_span<K, W>(s.gens, s.base, s.gens.size(), packed::pack<W>(v), false,
                                   abort_below - 1, threads);
    });
    if (abort_below > 0 && r.value < abort_below) {
        return std::nullopt;
    }
    return r.value;
}

}  // namespace lcdkit
