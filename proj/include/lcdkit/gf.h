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

#ifndef LCDKIT_GF_H
#define LCDKIT_GF_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lcdkit {

/// Field symbols are small indices. For GF(4): 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 where w^2 = w + 1.
using Symbol = std::uint8_t;

enum class Flavor : std::uint8_t { Euclidean, Hermitian };

/// One of GF(2), GF(3), GF(4) together with the inner product used for duals.
/// Hermitian is only available over GF(4).
class FieldSpec {
   public:
    /// Throws UsageError for unsupported order/flavor combinations.
    static FieldSpec make(int order, Flavor flavor = Flavor::Euclidean);
    static FieldSpec gf2() {
        return FieldSpec(2, Flavor::Euclidean);
    }
    static FieldSpec gf3() {
        return FieldSpec(3, Flavor::Euclidean);
    }
    static FieldSpec gf4h() {
        return FieldSpec(4, Flavor::Hermitian);
    }
    static FieldSpec gf4e() {
        return FieldSpec(4, Flavor::Euclidean);
    }
    /// Parses the code-file field tag: "gf2", "gf3", "gf4h" (and "gf4" for Euclidean GF(4)).
    static FieldSpec parse(std::string_view tag);

    int order() const {
        return order_;
    }
    Flavor flavor() const {
        return flavor_;
    }
    bool hermitian() const {
        return flavor_ == Flavor::Hermitian;
    }
    std::string tag() const;

    bool operator==(const FieldSpec &) const = default;

   private:
    constexpr FieldSpec(int order, Flavor flavor) : order_(static_cast<std::uint8_t>(order)), flavor_(flavor) {
    }
    std::uint8_t order_;
    Flavor flavor_;
};

/// Table-driven arithmetic for one field. Instances are immutable singletons.
class Field {
   public:
    static const Field &of(int order);

    int order() const {
        return order_;
    }
    Symbol add(Symbol a, Symbol b) const {
        return add_[a][b];
    }
    Symbol sub(Symbol a, Symbol b) const {
        return add_[a][neg_[b]];
    }
    Symbol mul(Symbol a, Symbol b) const {
        return mul_[a][b];
    }
    Symbol neg(Symbol a) const {
        return neg_[a];
    }
    /// Throws DomainError for zero.
    Symbol inv(Symbol a) const;
    /// Frobenius x -> x^2 on GF(4); identity on GF(2) and GF(3).
    Symbol conj(Symbol a) const {
        return conj_[a];
    }
    bool valid(int a) const {
        return a >= 0 && a < order_;
    }

   private:
    explicit Field(int order);
    int order_;
    std::array<std::array<Symbol, 4>, 4> add_{};
    std::array<std::array<Symbol, 4>, 4> mul_{};
    std::array<Symbol, 4> neg_{};
    std::array<Symbol, 4> inv_{};
    std::array<Symbol, 4> conj_{};
};

/// A symbol tagged with its field order, for checked arithmetic on single elements.
struct FieldElement {
    Symbol value;
    std::uint8_t order;

    bool operator==(const FieldElement &) const = default;
};

/// Throws UsageError when `value` is not an element of the field.
FieldElement element(FieldSpec field, int value);

FieldElement add(FieldElement a, FieldElement b);
FieldElement sub(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);
/// Conjugation under the inner product of `field`: the Frobenius map for Hermitian GF(4), identity otherwise.
FieldElement conj(FieldElement a, FieldSpec field);

/// Text alphabet: GF(2) "01", GF(3) "012", GF(4) "01wW".
char symbol_char(int order, Symbol s);
std::optional<Symbol> parse_symbol(int order, char c);

}  // namespace lcdkit

#endif
