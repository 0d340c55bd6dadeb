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

#ifndef LCDKIT_SRC_CSV_H
#define LCDKIT_SRC_CSV_H

#include <string>
#include <string_view>
#include <vector>

namespace lcdkit::csv {

/// Splits text into records of fields. Double-quoted fields may contain commas and "" escapes.
/// Blank lines and lines starting with '#' are dropped. Returns false on an unterminated quote.
inline bool parse(std::string_view text, std::vector<std::vector<std::string>> &out) {
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    auto finish = [&] {
        record.push_back(std::move(field));
        field.clear();
        bool blank = record.size() == 1 && record[0].empty();
        bool comment = !record[0].empty() && record[0][0] == '#';
        if (!blank && !comment) {
            out.push_back(std::move(record));
        }
        record.clear();
        any = false;
    };
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i++;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            finish();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) {
        return false;
    }
    if (any || !field.empty() || !record.empty()) {
        finish();
    }
    return true;
}

}  // namespace lcdkit::csv

#endif
