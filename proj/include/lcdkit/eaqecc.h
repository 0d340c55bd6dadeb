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

#ifndef LCDKIT_EAQECC_H
#define LCDKIT_EAQECC_H

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcdkit {

using BigInt = boost::multiprecision::cpp_int;

/// [[n, k, d; c]]: n channel qubits, k logical qubits, distance d, c ebits.
struct EaqeccParams {
    BigInt n;
    BigInt k;
    BigInt d;
    BigInt c;

    bool operator==(const EaqeccParams &) const = default;
    std::string to_string() const;
};

/// From a quaternary Hermitian LCD [n,k,d] code: [[n,k,d;n-k]]. Throws UsageError unless 1 <= k <= n and
/// 1 <= d <= n.
EaqeccParams from_hermitian_lcd(long long n, long long k, long long d);

/// [[n + s(4^k-1)/3, k, d + s 4^(k-1); n + s(4^k-1)/3 - k]] in exact integer arithmetic.
EaqeccParams family(long long n, long long k, long long d, long long s);

}  // namespace lcdkit

#endif
