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

#include "lcdkit/bounds.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "csv.h"
#include "lcdkit/errors.h"

namespace lcdkit {

std::string_view seed_kind_name(SeedKind k) {
    switch (k) {
        case SeedKind::Witness:
            return "witness";
        case SeedKind::LiteratureExact:
            return "literature-exact";
        default:
            return "literature-bound";
    }
}

SeedKind parse_seed_kind(std::string_view s) {
    if (s == "witness") {
        return SeedKind::Witness;
    }
    if (s == "literature-exact") {
        return SeedKind::LiteratureExact;
    }
    if (s == "literature-bound") {
        return SeedKind::LiteratureBound;
    }
    throw ParseError("unknown seed kind '" + std::string(s) + "'");
}

std::optional<int> BoundsCell::best_lower() const {
    std::optional<int> out;
    if (lower) {
        out = lower->value;
    }
    if (literature_lower && (!out || literature_lower->value > *out)) {
        out = literature_lower->value;
    }
    return out;
}

bool BoundsCell::exact() const {
    auto lo = best_lower();
    return lo && upper && *lo == upper->value;
}

BoundsTable::BoundsTable(FieldSpec field, int n_max)
    : field_(field), n_max_(n_max), cells_(static_cast<size_t>((n_max + 1) * (n_max + 1))) {
    if (n_max < 1) {
        throw UsageError("bounds table needs n_max >= 1");
    }
}

void BoundsTable::check(int n, int k) const {
    if (!contains(n, k)) {
        throw UsageError("cell (" + std::to_string(n) + "," + std::to_string(k) + ") is outside the table");
    }
}

const BoundsCell &BoundsTable::at(int n, int k) const {
    check(n, k);
    return cells_[static_cast<size_t>(n * (n_max_ + 1) + k)];
}

BoundsCell &BoundsTable::cell(int n, int k) {
    check(n, k);
    return cells_[static_cast<size_t>(n * (n_max_ + 1) + k)];
}

namespace {

std::string describe(const Provenance &p) {
    std::string s = p.rule;
    if (!p.sources.empty()) {
        s += " from";
        for (auto [n, k] : p.sources) {
            s += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
    }
    if (!p.note.empty()) {
        s += " [" + p.note + "]";
    }
    return s;
}

std::string cell_name(int n, int k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

bool BoundsTable::raise_lower(int n, int k, int value, Provenance p) {
    BoundsCell &c = cell(n, k);
    if (value < 1 || value > n) {
        throw ConflictError("lower bound " + std::to_string(value) + " at " + cell_name(n, k) +
                            " is outside 1..n (" + describe(p) + ")");
    }
    if (c.upper && value > c.upper->value) {
        throw ConflictError("lower bound " + std::to_string(value) + " at " + cell_name(n, k) + " (" + describe(p) +
                            ") exceeds upper bound " + std::to_string(c.upper->value) + " (" +
                            describe(c.upper->provenance) + ")");
    }
    if (c.lower && c.lower->value >= value) {
        return false;
    }
    c.lower = Bound{value, std::move(p)};
    return true;
}

bool BoundsTable::cut_upper(int n, int k, int value, Provenance p) {
    BoundsCell &c = cell(n, k);
    if (value < 1) {
        throw ConflictError("upper bound " + std::to_string(value) + " at " + cell_name(n, k) + " is below 1 (" +
                            describe(p) + ")");
    }
    auto lo = c.best_lower();
    if (lo && value < *lo) {
        const Bound &src = c.lower && c.lower->value == *lo ? *c.lower : *c.literature_lower;
        throw ConflictError("upper bound " + std::to_string(value) + " at " + cell_name(n, k) + " (" + describe(p) +
                            ") is below lower bound " + std::to_string(*lo) + " (" + describe(src.provenance) + ")");
    }
    if (c.upper && c.upper->value <= value) {
        return false;
    }
    c.upper = Bound{value, std::move(p)};
    return true;
}

void BoundsTable::seed(int n, int k, std::optional<int> lower, std::optional<int> upper, SeedKind kind,
                       const std::string &provenance) {
    check(n, k);
    Provenance p{"seed:" + std::string(seed_kind_name(kind)), {}, provenance};
    if (kind == SeedKind::Witness && (!lower || upper)) {
        throw UsageError("a witness seed carries a lower bound only");
    }
    if (kind == SeedKind::LiteratureExact) {
        if (!lower || (upper && *upper != *lower)) {
            throw UsageError("a literature-exact seed needs lower = upper");
        }
        upper = lower;
    }
    if (upper) {
        cut_upper(n, k, *upper, p);
    }
    if (lower) {
        if (kind == SeedKind::LiteratureBound) {
            BoundsCell &c = cell(n, k);
            if (*lower < 1 || *lower > n) {
                throw ConflictError("lower bound outside 1..n at " + cell_name(n, k));
            }
            if (c.upper && *lower > c.upper->value) {
                throw ConflictError("lower bound " + std::to_string(*lower) + " at " + cell_name(n, k) + " (" +
                                    describe(p) + ") exceeds upper bound " + std::to_string(c.upper->value) +
                                    " (" + describe(c.upper->provenance) + ")");
            }
            if (!c.literature_lower || c.literature_lower->value < *lower) {
                c.literature_lower = Bound{*lower, p};
            }
        } else {
            raise_lower(n, k, *lower, p);
        }
    }
}

void seed_ternary_exact(BoundsTable &table, int n_lo, int n_hi) {
    if (table.field().order() != 3) {
        throw UsageError("ternary exact values need a GF(3) table");
    }
    n_hi = std::min(n_hi, table.n_max());
    for (int n = std::max(n_lo, 2); n <= n_hi; n++) {
        int d = n % 3 == 0 ? 1 : 2;
        table.cut_upper(n, n - 1, d, {"R5", {}, "d(n,n-1)"});
        table.raise_lower(n, n - 1, d, {"R5", {}, "d(n,n-1)"});
        if (n >= 20 && n <= 25) {
            const int offsets[] = {2, 3, 4};
            const int values[] = {2, 2, 3};
            for (int i = 0; i < 3; i++) {
                std::string note = "d(n,n-" + std::to_string(offsets[i]) + ")";
                table.cut_upper(n, n - offsets[i], values[i], {"R5", {}, note});
                table.raise_lower(n, n - offsets[i], values[i], {"R5", {}, note});
            }
        }
    }
}

namespace {

std::optional<int> parse_optional_int(const std::string &s, size_t line) {
    if (s.empty()) {
        return std::nullopt;
    }
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
        throw ParseError("seed line " + std::to_string(line) + ": '" + s + "' is not an integer");
    }
    return v;
}

}  // namespace

void load_seeds(BoundsTable &table, std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    if (!csv::parse(text, rows)) {
        throw ParseError("seed file has an unterminated quote");
    }
    if (rows.empty()) {
        throw ParseError("seed file is empty");
    }
    const std::vector<std::string> header{"field", "n", "k", "lower", "upper", "kind", "provenance"};
    if (rows[0] != header) {
        throw ParseError("seed file header must be field,n,k,lower,upper,kind,provenance");
    }
    for (size_t i = 1; i < rows.size(); i++) {
        const auto &r = rows[i];
        if (r.size() != header.size()) {
            throw ParseError("seed line " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                             " fields, expected 7");
        }
        FieldSpec f = FieldSpec::gf2();
        try {
            f = FieldSpec::parse(r[0]);
        } catch (const UsageError &e) {
            throw ParseError("seed line " + std::to_string(i + 1) + ": " + e.what());
        }
        if (f != table.field()) {
            continue;
        }
        auto n = parse_optional_int(r[1], i + 1);
        auto k = parse_optional_int(r[2], i + 1);
        if (!n || !k) {
            throw ParseError("seed line " + std::to_string(i + 1) + ": n and k are required");
        }
        if (*n > table.n_max()) {
            continue;
        }
        if (!table.contains(*n, *k)) {
            throw ParseError("seed line " + std::to_string(i + 1) + ": (" + r[1] + "," + r[2] + ") is not a cell");
        }
        table.seed(*n, *k, parse_optional_int(r[3], i + 1), parse_optional_int(r[4], i + 1), parse_seed_kind(r[5]),
                   r[6]);
    }
}

std::optional<Derivation> lower_rule(std::string_view rule, FieldSpec field, int n, int k, int d) {
    const bool binary = field.order() == 2;
    if (rule == "R1") {
        return Derivation{n + 1, k, d};
    }
    if (rule == "R2L") {
        if (k < 2) {
            return std::nullopt;
        }
        return Derivation{n, k - 1, d};
    }
    if (rule == "R3b") {
        if (!binary || k % 2 != 0 || d % 2 == 0) {
            return std::nullopt;
        }
        return Derivation{n + 1, k, d + 1};
    }
    if (rule == "R3c") {
        if (!binary || d % 2 == 0) {
            return std::nullopt;
        }
        return Derivation{n + 2, k, d + 1};
    }
    return std::nullopt;
}

std::vector<std::string> lower_rule_ids(FieldSpec field) {
    if (field.order() == 2) {
        return {"R1", "R2L", "R3b", "R3c"};
    }
    return {"R1", "R2L"};
}

std::vector<std::string> upper_rule_ids(FieldSpec field) {
    if (field.order() == 2) {
        return {"R2", "R3a", "R4"};
    }
    if (field.order() == 3) {
        return {"R2", "R4"};
    }
    return {"R2"};
}

namespace {

bool is_lower_rule(std::string_view rule) {
    return rule == "R1" || rule == "R2L" || rule == "R3b" || rule == "R3c";
}

// Upper bound from the rule's sources at their current values.
std::optional<int> upper_rule_value(const BoundsTable &t, std::string_view rule, int n, int k,
                                    std::vector<std::pair<int, int>> &sources) {
    auto up = [&](int a, int b) -> std::optional<int> {
        if (!t.contains(a, b) || !t.at(a, b).upper) {
            return std::nullopt;
        }
        return t.at(a, b).upper->value;
    };
    const int q = t.field().order();
    if (rule == "R2") {
        sources = {{n, k - 1}};
        return k >= 2 ? up(n, k - 1) : std::nullopt;
    }
    if (rule == "R3a") {
        if (q != 2 || k % 2 == 0 || k < 3) {
            return std::nullopt;
        }
        sources = {{n - 1, k - 1}};
        return up(n - 1, k - 1);
    }
    if (rule == "R4") {
        if ((q != 2 && q != 3) || k < 3) {
            return std::nullopt;
        }
        sources = {{n - 1, k - 1}, {n - 2, k - 2}};
        auto a = up(n - 1, k - 1);
        auto b = up(n - 2, k - 2);
        if (!a || !b) {
            return std::nullopt;
        }
        return std::max(*a, *b);
    }
    throw UsageError("unknown rule '" + std::string(rule) + "'");
}

}  // namespace

bool apply_rule(BoundsTable &table, std::string_view rule, int n, int k) {
    if (!table.contains(n, k)) {
        return false;
    }
    if (is_lower_rule(rule)) {
        const auto &src = table.at(n, k).lower;
        if (!src) {
            return false;
        }
        auto der = lower_rule(rule, table.field(), n, k, src->value);
        if (!der || !table.contains(der->n, der->k)) {
            return false;
        }
        return table.raise_lower(der->n, der->k, der->d, {std::string(rule), {{n, k}}, ""});
    }
    std::vector<std::pair<int, int>> sources;
    auto v = upper_rule_value(table, rule, n, k, sources);
    if (!v) {
        return false;
    }
    return table.cut_upper(n, k, *v, {std::string(rule), std::move(sources), ""});
}

int propagate(BoundsTable &table) {
    const auto lower = lower_rule_ids(table.field());
    const auto upper = upper_rule_ids(table.field());
    int sweeps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        sweeps++;
        for (int n = 1; n <= table.n_max(); n++) {
            for (int k = 1; k <= n; k++) {
                for (const auto &r : lower) {
                    changed = apply_rule(table, r, n, k) || changed;
                }
                for (const auto &r : upper) {
                    changed = apply_rule(table, r, n, k) || changed;
                }
            }
        }
    }
    return sweeps;
}

std::optional<int> rederive(const BoundsTable &table, int n, int k, bool upper) {
    const BoundsCell &c = table.at(n, k);
    const auto &b = upper ? c.upper : c.lower;
    if (!b || b->provenance.rule.starts_with("seed:") || b->provenance.rule == "R5") {
        return std::nullopt;
    }
    const std::string &rule = b->provenance.rule;
    if (is_lower_rule(rule)) {
        auto [sn, sk] = b->provenance.sources.at(0);
        const auto &src = table.at(sn, sk).lower;
        if (!src) {
            return std::nullopt;
        }
        auto der = lower_rule(rule, table.field(), sn, sk, src->value);
        if (!der || der->n != n || der->k != k) {
            return std::nullopt;
        }
        return der->d;
    }
    std::vector<std::pair<int, int>> sources;
    return upper_rule_value(table, rule, n, k, sources);
}

std::string explain(const BoundsTable &table, int n, int k) {
    std::ostringstream out;
    std::set<std::tuple<int, int, int>> seen;
    std::function<void(int, int, int, int)> walk = [&](int a, int b, int which, int depth) {
        // which: 0 lower, 1 literature lower, 2 upper
        if (!seen.insert({a, b, which}).second) {
            return;
        }
        const BoundsCell &c = table.at(a, b);
        const auto &bound = which == 0 ? c.lower : which == 1 ? c.literature_lower : c.upper;
        if (!bound) {
            return;
        }
        out << std::string(static_cast<size_t>(2 * depth), ' ') << cell_name(a, b) << ' '
            << (which == 2 ? "upper " : "lower ") << bound->value << " by " << describe(bound->provenance) << '\n';
        for (auto [sn, sk] : bound->provenance.sources) {
            walk(sn, sk, which == 2 ? 2 : 0, depth + 1);
        }
    };
    const BoundsCell &c = table.at(n, k);
    if (c.lower && (!c.literature_lower || c.lower->value >= c.literature_lower->value)) {
        walk(n, k, 0, 0);
    } else {
        walk(n, k, 1, 0);
    }
    walk(n, k, 2, 0);
    return out.str();
}

std::string render_cell(const BoundsTable &table, int n, int k) {
    if (!table.contains(n, k)) {
        return "";
    }
    const BoundsCell &c = table.at(n, k);
    auto lo = c.best_lower();
    if (lo && c.upper) {
        if (*lo == c.upper->value) {
            return std::to_string(*lo);
        }
        return std::to_string(*lo) + "-" + std::to_string(c.upper->value);
    }
    if (lo) {
        return ">=" + std::to_string(*lo);
    }
    if (c.upper) {
        return "<=" + std::to_string(c.upper->value);
    }
    return "";
}

std::string render(const BoundsTable &table, int n1, int n2, int k1, int k2, RenderFormat format) {
    std::ostringstream out;
    if (format == RenderFormat::Markdown) {
        out << "| n\\k |";
        for (int k = k1; k <= k2; k++) {
            out << ' ' << k << " |";
        }
        out << "\n|---|";
        for (int k = k1; k <= k2; k++) {
            out << "---|";
        }
        out << '\n';
        for (int n = n1; n <= n2; n++) {
            out << "| " << n << " |";
            for (int k = k1; k <= k2; k++) {
                out << ' ' << render_cell(table, n, k) << " |";
            }
            out << '\n';
        }
        return out.str();
    }
    out << "n";
    for (int k = k1; k <= k2; k++) {
        out << ',' << k;
    }
    out << '\n';
    for (int n = n1; n <= n2; n++) {
        out << n;
        for (int k = k1; k <= k2; k++) {
            out << ',' << render_cell(table, n, k);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lcdkit
