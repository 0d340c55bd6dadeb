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

#include "lcdkit/gf.h"

#include "lcdkit/errors.h"

namespace lcdkit {

FieldSpec FieldSpec::make(int order, Flavor flavor) {
    if (order != 2 && order != 3 && order != 4) {
        throw UsageError("unsupported field order " + std::to_string(order) + " (expected 2, 3 or 4)");
    }
    if (flavor == Flavor::Hermitian && order != 4) {
        throw UsageError("the Hermitian inner product is only available over GF(4)");
    }
    return FieldSpec(order, flavor);
}

FieldSpec FieldSpec::parse(std::string_view tag) {
    if (tag == "gf2") {
        return gf2();
    }
    if (tag == "gf3") {
        return gf3();
    }
    if (tag == "gf4h") {
        return gf4h();
    }
    if (tag == "gf4") {
        return gf4e();
    }
    throw UsageError("unknown field tag '" + std::string(tag) + "' (expected gf2, gf3 or gf4h)");
}

std::string FieldSpec::tag() const {
    switch (order_) {
        case 2:
            return "gf2";
        case 3:
            return "gf3";
        default:
            return hermitian() ? "gf4h" : "gf4";
    }
}

Field::Field(int order) : order_(order) {
    for (int a = 0; a < order; a++) {
        for (int b = 0; b < order; b++) {
            int s, p;
            if (order == 4) {
                // Bit 0 is the coefficient of 1 and bit 1 the coefficient of w, so addition is xor.
                s = a ^ b;
                if (a == 0 || b == 0) {
                    p = 0;
                } else {
                    p = (a - 1 + b - 1) % 3 + 1;
                }
            } else {
                s = (a + b) % order;
                p = (a * b) % order;
            }
            add_[a][b] = static_cast<Symbol>(s);
            mul_[a][b] = static_cast<Symbol>(p);
        }
    }
    for (int a = 0; a < order; a++) {
        for (int b = 0; b < order; b++) {
            if (add_[a][b] == 0) {
                neg_[a] = static_cast<Symbol>(b);
            }
            if (mul_[a][b] == 1) {
                inv_[a] = static_cast<Symbol>(b);
            }
        }
        conj_[a] = order == 4 ? mul_[a][a] : static_cast<Symbol>(a);
    }
}

const Field &Field::of(int order) {
    static const Field gf2(2);
    static const Field gf3(3);
    static const Field gf4(4);
    switch (order) {
        case 2:
            return gf2;
        case 3:
            return gf3;
        case 4:
            return gf4;
        default:
            throw UsageError("unsupported field order " + std::to_string(order));
    }
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) {
        throw DomainError("zero has no multiplicative inverse");
    }
    return inv_[a];
}

namespace {

const Field &checked_pair(FieldElement a, FieldElement b) {
    if (a.order != b.order) {
        throw UsageError("operands come from different fields (GF(" + std::to_string(a.order) + ") and GF(" +
                         std::to_string(b.order) + "))");
    }
    return Field::of(a.order);
}

}  // namespace

FieldElement element(FieldSpec field, int value) {
    if (value < 0 || value >= field.order()) {
        throw UsageError("value " + std::to_string(value) + " is not an element of GF(" +
                         std::to_string(field.order()) + ")");
    }
    return {static_cast<Symbol>(value), static_cast<std::uint8_t>(field.order())};
}

FieldElement add(FieldElement a, FieldElement b) {
    return {checked_pair(a, b).add(a.value, b.value), a.order};
}

FieldElement sub(FieldElement a, FieldElement b) {
    return {checked_pair(a, b).sub(a.value, b.value), a.order};
}

FieldElement mul(FieldElement a, FieldElement b) {
    return {checked_pair(a, b).mul(a.value, b.value), a.order};
}

FieldElement neg(FieldElement a) {
    return {Field::of(a.order).neg(a.value), a.order};
}

FieldElement inv(FieldElement a) {
    return {Field::of(a.order).inv(a.value), a.order};
}

FieldElement conj(FieldElement a, FieldSpec field) {
    if (a.order != field.order()) {
        throw UsageError("element and field spec disagree on the field order");
    }
    if (!field.hermitian()) {
        return a;
    }
    return {Field::of(a.order).conj(a.value), a.order};
}

char symbol_char(int order, Symbol s) {
    if (order == 4) {
        static constexpr char kGf4[] = {'0', '1', 'w', 'W'};
        return kGf4[s & 3];
    }
    return static_cast<char>('0' + s);
}

std::optional<Symbol> parse_symbol(int order, char c) {
    if (order == 4) {
        switch (c) {
            case '0':
                return 0;
            case '1':
                return 1;
            case 'w':
                return 2;
            case 'W':
                return 3;
            default:
                return std::nullopt;
        }
    }
    if (c >= '0' && c < '0' + order) {
        return static_cast<Symbol>(c - '0');
    }
    return std::nullopt;
}

}  // namespace lcdkit
