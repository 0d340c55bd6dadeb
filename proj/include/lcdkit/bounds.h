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

#ifndef LCDKIT_BOUNDS_H
#define LCDKIT_BOUNDS_H

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcdkit/gf.h"

namespace lcdkit {

// Rule ids:
//   R1   lower  (n,k) -> (n+1,k), same d                       zero column
//   R2   upper  up(n,k) <= up(n,k-1)
//   R2L  lower  (n,k) -> (n,k-1), same d                       subcode reading of R2
//   R3a  upper  k odd: up(n,k) <= up(n-1,k-1)                  binary
//   R3b  lower  k even, d odd: (n,k,d) -> (n+1,k,d+1)          binary
//   R3c  lower  d odd: (n,k,d) -> (n+2,k,d+1)                  binary
//   R4   upper  k >= 3: up(n,k) <= max(up(n-1,k-1), up(n-2,k-2))  binary and ternary
//   R5   exact  ternary d(n,n-1), d(n,n-2), d(n,n-3), d(n,n-4)

enum class SeedKind { Witness, LiteratureExact, LiteratureBound };

std::string_view seed_kind_name(SeedKind k);
/// Accepts "witness", "literature-exact", "literature-bound".
SeedKind parse_seed_kind(std::string_view s);

struct Provenance {
    /// "seed:<kind>" or a rule id.
    std::string rule;
    std::vector<std::pair<int, int>> sources;
    std::string note;
};

struct Bound {
    int value;
    Provenance provenance;
};

struct BoundsCell {
    /// Lower bound that the lower-bound rules may start from: witnesses, exact values, and what is derived
    /// from them.
    std::optional<Bound> lower;
    /// Literature lower bound. Shown, never propagated.
    std::optional<Bound> literature_lower;
    std::optional<Bound> upper;

    std::optional<int> best_lower() const;
    bool exact() const;
};

class BoundsTable {
   public:
    /// Cells (n, k) with 1 <= k <= n <= n_max.
    BoundsTable(FieldSpec field, int n_max);

    FieldSpec field() const {
        return field_;
    }
    int n_max() const {
        return n_max_;
    }
    bool contains(int n, int k) const {
        return n >= 1 && n <= n_max_ && k >= 1 && k <= n;
    }
    /// Throws UsageError outside the grid.
    const BoundsCell &at(int n, int k) const;

    /// Throws ConflictError (naming both provenances) when the seed contradicts the cell.
    void seed(int n, int k, std::optional<int> lower, std::optional<int> upper, SeedKind kind,
              const std::string &provenance);

    /// Returns true when the bound improved. Throws ConflictError on lower > upper.
    bool raise_lower(int n, int k, int value, Provenance p);
    bool cut_upper(int n, int k, int value, Provenance p);

   private:
    BoundsCell &cell(int n, int k);
    void check(int n, int k) const;

    FieldSpec field_;
    int n_max_;
    std::vector<BoundsCell> cells_;
};

/// Ternary exact values: d(n,n-1) = 1 if 3 | n else 2 for n in [n_lo, n_hi], and for 20 <= n <= 25
/// d(n,n-2) = 2, d(n,n-3) = 2, d(n,n-4) = 3.
void seed_ternary_exact(BoundsTable &table, int n_lo, int n_hi);

/// CSV with header field,n,k,lower,upper,kind,provenance. Rows for other fields and cells beyond n_max are
/// skipped. Throws ParseError.
void load_seeds(BoundsTable &table, std::string_view csv);

struct Derivation {
    int n;
    int k;
    int d;
};

/// Pure lower-bound rule on an existing code [n,k,d]: the parameters it yields, if the rule applies.
std::optional<Derivation> lower_rule(std::string_view rule, FieldSpec field, int n, int k, int d);
/// Lower-bound rule ids applicable to `field`.
std::vector<std::string> lower_rule_ids(FieldSpec field);
std::vector<std::string> upper_rule_ids(FieldSpec field);

/// One application. Lower rules read the propagating lower bound of (n,k) and write the target; upper
/// rules compute a bound for (n,k) from its source cells. Returns whether anything changed.
bool apply_rule(BoundsTable &table, std::string_view rule, int n, int k);

/// Applies every rule of the field until nothing changes. Returns the number of sweeps.
int propagate(BoundsTable &table);

/// The value a bound's rule gives from the current values of its recorded sources, or nullopt for seeds.
std::optional<int> rederive(const BoundsTable &table, int n, int k, bool upper);

/// Human-readable derivation chain for a cell, one line per step, seeds last.
std::string explain(const BoundsTable &table, int n, int k);

enum class RenderFormat { Markdown, Csv };

/// "d" for exact cells, "lo-hi" otherwise, ">=lo" / "<=hi" for one-sided cells, "" when nothing is known.
std::string render_cell(const BoundsTable &table, int n, int k);
std::string render(const BoundsTable &table, int n1, int n2, int k1, int k2, RenderFormat format);

}  // namespace lcdkit

#endif
