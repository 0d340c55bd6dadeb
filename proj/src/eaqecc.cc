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

#include "lcdkit/eaqecc.h"

#include <stdexcept>

#include "lcdkit/errors.h"

namespace lcdkit {

std::string EaqeccParams::to_string() const {
    return "[[" + n.str() + "," + k.str() + "," + d.str() + ";" + c.str() + "]]";
}

EaqeccParams from_hermitian_lcd(long long n, long long k, long long d) {
    if (k < 1 || k > n) {
        throw UsageError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    if (d < 1 || d > n) {
        throw UsageError("need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    return {BigInt(n), BigInt(k), BigInt(d), BigInt(n - k)};
}

EaqeccParams family(long long n, long long k, long long d, long long s) {
    if (s < 0) {
        throw UsageError("s must be nonnegative");
    }
    EaqeccParams base = from_hermitian_lcd(n, k, d);
    if (k > (1LL << 24)) {
        throw UsageError("k too large for the family formula");
    }
    BigInt four_k = BigInt(1) << static_cast<unsigned>(2 * k);
    BigInt numerator = four_k - 1;
    if (numerator % 3 != 0) {
        throw std::logic_error("4^k - 1 is not divisible by 3");
    }
    BigInt length_step = numerator / 3;
    BigInt distance_step = BigInt(1) << static_cast<unsigned>(2 * (k - 1));
    BigInt n2 = base.n + length_step * s;
    return {n2, base.k, base.d + distance_step * s, n2 - base.k};
}

}  // namespace lcdkit
