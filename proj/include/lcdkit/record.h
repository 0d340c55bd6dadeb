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

#ifndef LCDKIT_RECORD_H
#define LCDKIT_RECORD_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/code.h"

namespace lcdkit {

// Record text, one item per line ('#' comments allowed):
//   base t_19_6_9.code          path relative to the record file; a .rec base is replayed first
//   base missing:<description>  base code not available
//   shorten 1,2,8               1-based coordinates
//   puncture 3,4
//   extend-m1 1102001100000110222
//   extend-m2 <symbols>
//   pad

struct Step {
    enum class Kind { Shorten, Puncture, ExtendM1, ExtendM2, Pad };
    Kind kind;
    /// 0-based coordinates for Shorten and Puncture.
    std::vector<size_t> coordinates;
    /// Symbols for the extension steps, parsed against the field of the code they apply to.
    std::string symbols;
};

struct ConstructionRecord {
    std::string base;
    std::vector<Step> steps;

    bool base_missing() const {
        return base.starts_with("missing:");
    }
};

/// Throws ParseError.
ConstructionRecord parse_record(std::string_view text);
ConstructionRecord read_record(const std::filesystem::path &path);
std::string format_record(const ConstructionRecord &r);

/// Applies the steps in order and returns the code after each one.
std::vector<LinearCode> apply_steps(const LinearCode &base, const std::vector<Step> &steps);
LinearCode apply_step(const LinearCode &c, const Step &step);

struct Replay {
    LinearCode base;
    /// intermediates[i] is the code after step i; the last one is the result.
    std::vector<LinearCode> intermediates;

    const LinearCode &result() const {
        return intermediates.empty() ? base : intermediates.back();
    }
};

/// `dir` resolves a relative base path. Throws MissingBaseError for a missing base.
Replay replay(const ConstructionRecord &record, const std::filesystem::path &dir);
Replay replay_file(const std::filesystem::path &path);

}  // namespace lcdkit

#endif
