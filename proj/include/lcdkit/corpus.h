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

#ifndef LCDKIT_CORPUS_H
#define LCDKIT_CORPUS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lcdkit/bounds.h"
#include "lcdkit/code.h"
#include "lcdkit/enumerate.h"
#include "lcdkit/record.h"

namespace lcdkit {

/// One manifest row. Claims are checked by check_entry, never trusted.
struct CorpusEntry {
    std::string id;
    /// A .code file or a .rec construction record, relative to the corpus directory.
    std::string file;
    FieldSpec field = FieldSpec::gf2();
    int n = 0;
    int k = 0;
    int d = 0;
    bool lcd = false;
    bool odd_like = false;
    /// Base code not shipped; checks are skipped unless asked for.
    bool optional = false;
    std::optional<std::vector<std::uint64_t>> weight_distribution;
    std::string citation;
};

/// $LCDKIT_CORPUS_DIR if set, otherwise the corpus directory of the source tree.
std::filesystem::path default_corpus_dir();

class Corpus {
   public:
    /// Reads <dir>/manifest.csv. Throws ParseError.
    static Corpus load(const std::filesystem::path &dir);

    const std::filesystem::path &dir() const {
        return dir_;
    }
    const std::vector<CorpusEntry> &entries() const {
        return entries_;
    }
    /// Throws UsageError for an unknown id.
    const CorpusEntry &find(const std::string &id) const;
    /// Throws MissingBaseError when a record's base is not shipped.
    Replay replay(const CorpusEntry &e) const;
    LinearCode code(const CorpusEntry &e) const;

   private:
    std::filesystem::path dir_;
    std::vector<CorpusEntry> entries_;
};

struct CheckResult {
    enum class Status { Pass, Fail, Skipped, Unavailable };
    std::string id;
    Status status;
    std::string detail;
};

std::string_view status_name(CheckResult::Status s);

CheckResult check_entry(const Corpus &corpus, const CorpusEntry &e, const EnumerationOptions &opts = {});
/// Optional entries are reported as Skipped unless include_optional is set.
std::vector<CheckResult> check_corpus(const Corpus &corpus, bool include_optional,
                                      const EnumerationOptions &opts = {});

/// Seeds every passing non-optional entry of the table's field as a witness with provenance
/// "verified:<id>". Returns the number of witnesses added.
int seed_verified_witnesses(BoundsTable &table, const Corpus &corpus, const EnumerationOptions &opts = {});

/// Seeds from `seeds_csv`, verified witnesses from `corpus` (if given), ternary exact values for n1..n2,
/// then propagates. Cells run up to n2.
BoundsTable build_bounds_table(FieldSpec field, int n1, int n2, std::string_view seeds_csv, const Corpus *corpus,
                               const EnumerationOptions &opts = {});

}  // namespace lcdkit

#endif
