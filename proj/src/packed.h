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

#ifndef LCDKIT_SRC_PACKED_H
#define LCDKIT_SRC_PACKED_H

// Bit-sliced row vectors used by the enumeration kernels. A symbol s is stored as bit (s & 1) in `lo` and
// bit (s >> 1) in `hi`. GF(2) leaves `hi` zero.

#include <bit>
#include <cstdint>
#include <span>

#include "lcdkit/gf.h"

namespace lcdkit::packed {

template <int W>
struct Vec {
    std::uint64_t lo[W] = {};
    std::uint64_t hi[W] = {};

    bool operator==(const Vec &) const = default;
};

template <int W>
Vec<W> pack(std::span<const Symbol> v) {
    Vec<W> out;
    for (size_t i = 0; i < v.size(); i++) {
        out.lo[i / 64] |= static_cast<std::uint64_t>(v[i] & 1) << (i % 64);
        out.hi[i / 64] |= static_cast<std::uint64_t>(v[i] >> 1) << (i % 64);
    }
    return out;
}

template <int W>
void unpack(const Vec<W> &v, std::span<Symbol> out) {
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = static_cast<Symbol>(((v.lo[i / 64] >> (i % 64)) & 1) | (((v.hi[i / 64] >> (i % 64)) & 1) << 1));
    }
}

struct Binary {
    template <int W>
    static void add(Vec<W> &a, const Vec<W> &b) {
        for (int i = 0; i < W; i++) {
            a.lo[i] ^= b.lo[i];
        }
    }
    template <int W>
    static int weight(const Vec<W> &a) {
        int w = 0;
        for (int i = 0; i < W; i++) {
            w += std::popcount(a.lo[i]);
        }
        return w;
    }
};

// GF(4) addition is xor on both planes.
struct Quaternary {
    template <int W>
    static void add(Vec<W> &a, const Vec<W> &b) {
        for (int i = 0; i < W; i++) {
            a.lo[i] ^= b.lo[i];
            a.hi[i] ^= b.hi[i];
        }
    }
    template <int W>
    static int weight(const Vec<W> &a) {
        int w = 0;
        for (int i = 0; i < W; i++) {
            w += std::popcount(a.lo[i] | a.hi[i]);
        }
        return w;
    }
};

// GF(3) with lo marking 1 and hi marking 2.
struct Ternary {
    template <int W>
    static void add(Vec<W> &a, const Vec<W> &b) {
        for (int i = 0; i < W; i++) {
            std::uint64_t t = (a.lo[i] | b.hi[i]) ^ (a.hi[i] | b.lo[i]);
            std::uint64_t l = (a.hi[i] | b.hi[i]) ^ t;
            std::uint64_t h = (a.lo[i] | b.lo[i]) ^ t;
            a.lo[i] = l;
            a.hi[i] = h;
        }
    }
    template <int W>
    static int weight(const Vec<W> &a) {
        return Quaternary::weight(a);
    }
};

}  // namespace lcdkit::packed

#endif
