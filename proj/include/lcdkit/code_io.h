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

#ifndef LCDKIT_CODE_IO_H
#define LCDKIT_CODE_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "lcdkit/code.h"

namespace lcdkit {

// Text format:
//   gf2 13 7
//   1000000111001
//   ...
// '#' starts a comment line; blank lines are skipped; whitespace between symbols is ignored.

/// Throws ParseError for malformed text and RankDeficientError for dependent rows.
LinearCode parse_code(std::string_view text);
/// Throws ParseError when the file cannot be read.
LinearCode read_code(const std::filesystem::path &path);
/// Canonical text; parse_code(format_code(c)) reproduces c exactly.
std::string format_code(const LinearCode &c);
void write_code(const std::filesystem::path &path, const LinearCode &c);

std::string read_text_file(const std::filesystem::path &path);

}  // namespace lcdkit

#endif
