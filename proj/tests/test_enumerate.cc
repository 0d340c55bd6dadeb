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

#include <gtest/gtest.h>

#include <numeric>

#include "lcdkit/code_io.h"
#include "lcdkit/enumerate.h"
#include "lcdkit/errors.h"
#include "test_util.h"

namespace lcdkit {
namespace {

using testing::all_fields;
using testing::Rng;

LinearCode corpus_code(const std::string &name) {
    return read_code(std::string(LCDKIT_CORPUS_DIR) + "/" + name);
}

std::uint64_t power(int q, size_t k) {
    std::uint64_t p = 1;
    for (size_t i = 0; i < k; i++) {
        p *= static_cast<std::uint64_t>(q);
    }
    return p;
}

TEST(MinWeight, identity) {
    for (auto f : all_fields()) {
        LinearCode c = LinearCode::from_generator(Matrix::identity(f, 5));
        EXPECT_EQ(min_weight(c, Strategy::Exhaustive), 1);
        EXPECT_EQ(min_weight(c, Strategy::BrouwerZimmermann), 1);
    }
}

TEST(MinWeight, printed_codes) {
    EXPECT_EQ(min_weight(corpus_code("b_13_7_4.code"), Strategy::Exhaustive), 4);
    EXPECT_EQ(min_weight(corpus_code("b_13_7_4.code"), Strategy::BrouwerZimmermann), 4);
    EXPECT_EQ(min_weight(corpus_code("t_20_5_11.code"), Strategy::Exhaustive), 11);
    EXPECT_EQ(min_weight(corpus_code("t_20_5_11.code"), Strategy::BrouwerZimmermann), 11);
}

TEST(MinWeight, zero_code) {
    EXPECT_THROW(min_weight(LinearCode::zero(FieldSpec::gf2(), 4), Strategy::Exhaustive), EmptyCodeError);
}

TEST(MinWeight, strategies_match_brute_force) {
    Rng rng(31);
    for (auto f : all_fields()) {
        for (int t = 0; t < 150; t++) {
            size_t n = 2 + rng() % 14;
            size_t k = 1 + rng() % std::min<size_t>(n, f.order() == 2 ? 10 : 6);
            LinearCode c = testing::random_code(f, n, k, rng);
            int d = testing::brute_min_weight(c);
            EXPECT_EQ(min_weight(c, Strategy::Exhaustive), d) << f.tag() << "\n" << format_code(c);
            EXPECT_EQ(min_weight(c, Strategy::BrouwerZimmermann), d) << f.tag() << "\n" << format_code(c);
        }
    }
}

TEST(MinWeight, long_codes_use_several_words) {
    Rng rng(32);
    for (auto f : all_fields()) {
        for (size_t n : {65u, 130u, 200u, 400u}) {
            LinearCode c = testing::random_code(f, n, 4, rng);
            int d = testing::brute_min_weight(c);
            EXPECT_EQ(min_weight(c, Strategy::Exhaustive), d) << f.tag() << " n=" << n;
            EXPECT_EQ(min_weight(c, Strategy::BrouwerZimmermann), d) << f.tag() << " n=" << n;
        }
    }
}

TEST(MinWeight, medium_codes_agree) {
    Rng rng(33);
    for (auto f : all_fields()) {
        for (int t = 0; t < 12; t++) {
            size_t k = f.order() == 2 ? 14 + t % 5 : (f.order() == 3 ? 8 + t % 3 : 6 + t % 3);
            size_t n = 2 * k + rng() % 10;
            LinearCode c = testing::random_code(f, n, k, rng);
            EXPECT_EQ(min_weight(c, Strategy::Exhaustive), min_weight(c, Strategy::BrouwerZimmermann)) << f.tag();
        }
    }
}

TEST(MinWeight, low_weight_planted) {
    // A code containing a known light word: BZ must still find it.
    Rng rng(34);
    for (auto f : all_fields()) {
        for (int t = 0; t < 30; t++) {
            size_t n = 24, k = 8;
            Matrix g = testing::random_matrix(f, k, n, rng);
            for (size_t j = 0; j < n; j++) {
                g(0, j) = j < 3 ? 1 : 0;
            }
            if (rank(g) != k) {
                continue;
            }
            LinearCode c = LinearCode::from_generator(g);
            int ex = min_weight(c, Strategy::Exhaustive);
            EXPECT_LE(ex, 3);
            EXPECT_EQ(min_weight(c, Strategy::BrouwerZimmermann), ex);
        }
    }
}

TEST(MinWeight, budget_exceeded_bounds_are_sound) {
    Rng rng(35);
    for (auto f : all_fields()) {
        for (int t = 0; t < 20; t++) {
            LinearCode c = testing::random_code(f, 16, 6, rng);
            int d = testing::brute_min_weight(c);
            EnumerationOptions small;
            small.cap = 20;
            for (Strategy s : {Strategy::Exhaustive, Strategy::BrouwerZimmermann}) {
                try {
                    int got = min_weight(c, s, small);
                    EXPECT_EQ(got, d);
                } catch (const BudgetExceededError &e) {
                    EXPECT_GE(e.upper_bound, d);
                    EXPECT_LE(e.lower_bound, d);
                }
                Distance est = estimate_min_weight(c, s, small);
                EXPECT_GE(est.value, d);
                EXPECT_LE(est.lower, d);
                if (est.exact) {
                    EXPECT_EQ(est.value, d);
                    EXPECT_EQ(est.lower, d);
                }
            }
        }
    }
}

TEST(MinWeight, exhaustive_over_cap_is_inexact) {
    Rng rng(36);
    LinearCode c = testing::random_code(FieldSpec::gf2(), 30, 12, rng);
    EnumerationOptions opts;
    opts.cap = 1u << 8;
    Distance d = estimate_min_weight(c, Strategy::Exhaustive, opts);
    EXPECT_FALSE(d.exact);
    EXPECT_THROW(min_weight(c, Strategy::Exhaustive, opts), BudgetExceededError);
}

TEST(MinWeight, default_caps) {
    EXPECT_EQ(default_cap(FieldSpec::gf2()), 1ull << 26);
    EXPECT_EQ(default_cap(FieldSpec::gf3()), 43046721ull);
    EXPECT_EQ(default_cap(FieldSpec::gf4h()), 1ull << 26);
}

TEST(Distribution, matches_brute_force) {
    Rng rng(37);
    for (auto f : all_fields()) {
        for (int t = 0; t < 100; t++) {
            size_t n = 1 + rng() % 14;
            size_t k = 1 + rng() % std::min<size_t>(n, f.order() == 2 ? 10 : 5);
            LinearCode c = testing::random_code(f, n, k, rng);
            WeightDistribution wd = weight_distribution(c);
            EXPECT_EQ(wd.counts, testing::brute_distribution(c)) << f.tag();
            EXPECT_EQ(std::accumulate(wd.counts.begin(), wd.counts.end(), std::uint64_t{0}), power(f.order(), k));
            EXPECT_EQ(wd.counts[0], 1u);
            EXPECT_EQ(wd.min_weight, testing::brute_min_weight(c));
            if (f.order() == 2) {
                EXPECT_EQ(wd.odd_like, !is_even_like(c));
            } else {
                EXPECT_FALSE(wd.odd_like);
            }
        }
    }
}

TEST(Distribution, repetition) {
    LinearCode c = LinearCode::from_generator(Matrix::parse(FieldSpec::gf2(), {"11"}));
    EXPECT_EQ(weight_distribution(c).counts, (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(Distribution, over_cap) {
    Rng rng(38);
    LinearCode c = testing::random_code(FieldSpec::gf3(), 20, 8, rng);
    EnumerationOptions opts;
    opts.cap = 100;
    EXPECT_THROW(weight_distribution(c, opts), BudgetExceededError);
}

TEST(Threads, results_do_not_depend_on_thread_count) {
    Rng rng(39);
    for (auto f : all_fields()) {
        size_t k = f.order() == 2 ? 18 : (f.order() == 3 ? 11 : 9);
        LinearCode c = testing::random_code(f, 2 * k + 6, k, rng);
        EnumerationOptions one, eight;
        one.threads = 1;
        eight.threads = 8;
        for (Strategy s : {Strategy::Exhaustive, Strategy::BrouwerZimmermann}) {
            EXPECT_EQ(estimate_min_weight(c, s, one), estimate_min_weight(c, s, eight)) << f.tag();
        }
        EXPECT_EQ(weight_distribution(c, one).counts, weight_distribution(c, eight).counts);
        EnumerationOptions capped_one = one, capped_eight = eight;
        capped_one.cap = capped_eight.cap = 5000;
        for (Strategy s : {Strategy::Exhaustive, Strategy::BrouwerZimmermann}) {
            EXPECT_EQ(estimate_min_weight(c, s, capped_one), estimate_min_weight(c, s, capped_eight)) << f.tag();
        }
    }
}

TEST(Coset, matches_brute_force) {
    Rng rng(40);
    for (auto f : all_fields()) {
        for (int t = 0; t < 60; t++) {
            size_t n = 3 + rng() % 9;
            size_t k = 1 + rng() % std::min<size_t>(n, 5);
            LinearCode c = testing::random_code(f, n, k, rng);
            Vector v = testing::random_vector(f, n, rng);
            const Field &F = Field::of(f.order());
            int best = 1 << 30;
            for (const Vector &w : testing::codeword_set(c)) {
                Vector s(n);
                for (size_t i = 0; i < n; i++) {
                    s[i] = F.add(v[i], w[i]);
                }
                best = std::min(best, testing::brute_weight(s));
            }
            EXPECT_EQ(coset_min_weight(c, v, 0), best) << f.tag();
            int abort = static_cast<int>(rng() % (n + 2));
            auto got = coset_min_weight(c, v, abort);
            if (best < abort) {
                EXPECT_FALSE(got.has_value());
            } else {
                EXPECT_EQ(got, best);
            }
        }
    }
}

}  // namespace
}  // namespace lcdkit
