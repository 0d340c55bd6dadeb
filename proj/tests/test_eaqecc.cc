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

#include <gmpxx.h>

#include "lcdkit/eaqecc.h"
#include "lcdkit/errors.h"

namespace lcdkit {
namespace {

// GMP evaluation of the family formula, kept apart from the Boost path in the library.
std::string gmp_family(long n, unsigned long k, long d, unsigned long s) {
    mpz_class four_k, four_k1;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpz_ui_pow_ui(four_k1.get_mpz_t(), 4, k - 1);
    mpz_class len = mpz_class(n) + (four_k - 1) / 3 * s;
    mpz_class dist = mpz_class(d) + four_k1 * s;
    mpz_class ebits = len - mpz_class(static_cast<long>(k));
    return "[[" + len.get_str() + "," + std::to_string(k) + "," + dist.get_str() + ";" + ebits.get_str() + "]]";
}

TEST(FromHermitianLcd, corollary_tuples) {
    EXPECT_EQ(from_hermitian_lcd(22, 12, 7).to_string(), "[[22,12,7;10]]");
    EXPECT_EQ(from_hermitian_lcd(23, 13, 7).to_string(), "[[23,13,7;10]]");
    EXPECT_EQ(from_hermitian_lcd(24, 14, 7).to_string(), "[[24,14,7;10]]");
    EXPECT_EQ(from_hermitian_lcd(25, 15, 7).to_string(), "[[25,15,7;10]]");
    EXPECT_EQ(from_hermitian_lcd(9, 9, 1).to_string(), "[[9,9,1;0]]");
}

TEST(FromHermitianLcd, rejects_out_of_range) {
    EXPECT_THROW(from_hermitian_lcd(5, 0, 1), UsageError);
    EXPECT_THROW(from_hermitian_lcd(5, 6, 1), UsageError);
    EXPECT_THROW(from_hermitian_lcd(5, 2, 0), UsageError);
    EXPECT_THROW(from_hermitian_lcd(5, 2, 6), UsageError);
}

TEST(Family, printed_example) {
    EXPECT_EQ(family(22, 12, 7, 1).to_string(), "[[5592427,12,4194311;5592415]]");
    EXPECT_EQ(family(22, 12, 7, 1).to_string(), gmp_family(22, 12, 7, 1));
}

TEST(Family, matches_gmp) {
    for (auto [n, k, d] : {std::tuple{22, 12, 7}, {23, 13, 7}, {24, 14, 7}, {25, 15, 7}}) {
        for (unsigned long s : {0ul, 1ul, 2ul, 7ul, 1000ul, 123456789ul}) {
            EXPECT_EQ(family(n, k, d, static_cast<long long>(s)).to_string(), gmp_family(n, k, d, s));
        }
    }
    // Beyond 64 bits.
    EXPECT_EQ(family(100, 40, 30, 5).to_string(), gmp_family(100, 40, 30, 5));
    EXPECT_GT(family(100, 40, 30, 5).d, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Family, invariants) {
    for (long long n = 1; n <= 12; n++) {
        for (long long k = 1; k <= n; k++) {
            for (long long d = 1; d <= n - k + 1; d++) {
                EXPECT_EQ(family(n, k, d, 0), from_hermitian_lcd(n, k, d));
                for (long long s : {1, 3}) {
                    EaqeccParams p = family(n, k, d, s);
                    EXPECT_EQ(p.c, p.n - p.k);
                    EXPECT_EQ(p.k, k);
                }
            }
        }
    }
    EXPECT_THROW(family(22, 12, 7, -1), UsageError);
    EXPECT_THROW(family(5, 6, 1, 1), UsageError);
}

}  // namespace
}  // namespace lcdkit
