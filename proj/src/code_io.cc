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

#include "lcdkit/code_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "lcdkit/errors.h"

namespace lcdkit {

namespace {

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

size_t parse_count(const std::string &token, const char *what) {
    size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != token.size() || token.empty() || token[0] == '-') {
        throw ParseError(std::string("header ") + what + " '" + token + "' is not a nonnegative integer");
    }
    return static_cast<size_t>(v);
}

}  // namespace

LinearCode parse_code(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = trim(text.substr(start, end - start));
        if (!line.empty() && line[0] != '#') {
            lines.push_back(line);
        }
        start = end + 1;
    }
    if (lines.empty()) {
        throw ParseError("code file is empty (expected a 'field n k' header)");
    }
    std::istringstream header{std::string(lines[0])};
    std::string tag, n_tok, k_tok, extra;
    if (!(header >> tag >> n_tok >> k_tok) || (header >> extra)) {
        throw ParseError("malformed header '" + std::string(lines[0]) + "' (expected 'field n k')");
    }
    FieldSpec field = FieldSpec::gf2();
    try {
        field = FieldSpec::parse(tag);
    } catch (const UsageError &e) {
        throw ParseError(e.what());
    }
    const size_t n = parse_count(n_tok, "length");
    const size_t k = parse_count(k_tok, "dimension");
    if (n == 0 || k == 0) {
        throw ParseError("header declares an empty code");
    }
    if (lines.size() - 1 != k) {
        throw ParseError("header declares k=" + std::to_string(k) + " rows but the file has " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<Vector> rows;
    for (size_t i = 1; i < lines.size(); i++) {
        Vector row = parse_vector(field, lines[i]);
        if (row.size() != n) {
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " symbols, expected n=" + std::to_string(n));
        }
        rows.push_back(std::move(row));
    }
    return LinearCode::from_generator(Matrix::from_rows(field, rows));
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinearCode read_code(const std::filesystem::path &path) {
    return parse_code(read_text_file(path));
}

std::string format_code(const LinearCode &c) {
    std::string out = c.field().tag() + " " + std::to_string(c.length()) + " " + std::to_string(c.dimension()) + "\n";
    out += c.generator().to_string();
    return out;
}

void write_code(const std::filesystem::path &path, const LinearCode &c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write file '" + path.string() + "'");
    }
    out << format_code(c);
}

}  // namespace lcdkit
