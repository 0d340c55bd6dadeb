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

#include "lcdkit/corpus.h"

#include <cstdlib>
#include <sstream>

#include "csv.h"
#include "lcdkit/code_io.h"
#include "lcdkit/errors.h"

#ifndef LCDKIT_DEFAULT_CORPUS_DIR
#define LCDKIT_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace lcdkit {

std::filesystem::path default_corpus_dir() {
    if (const char *env = std::getenv("LCDKIT_CORPUS_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return LCDKIT_DEFAULT_CORPUS_DIR;
}

namespace {

int parse_int(const std::string &s, const std::string &what, size_t line) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
        throw ParseError("manifest line " + std::to_string(line) + ": " + what + " '" + s + "' is not an integer");
    }
    return v;
}

std::vector<std::uint64_t> parse_distribution(const std::string &text, int n, size_t line) {
    std::vector<std::uint64_t> counts(static_cast<size_t>(n) + 1, 0);
    std::istringstream in(text);
    std::string term;
    while (in >> term) {
        size_t colon = term.find(':');
        if (colon == std::string::npos) {
            throw ParseError("manifest line " + std::to_string(line) + ": weight term '" + term + "' lacks ':'");
        }
        int w = parse_int(term.substr(0, colon), "weight", line);
        int a = parse_int(term.substr(colon + 1), "count", line);
        if (w < 0 || w > n || a < 0) {
            throw ParseError("manifest line " + std::to_string(line) + ": weight term '" + term + "' out of range");
        }
        counts[static_cast<size_t>(w)] = static_cast<std::uint64_t>(a);
    }
    return counts;
}

}  // namespace

Corpus Corpus::load(const std::filesystem::path &dir) {
    Corpus c;
    c.dir_ = dir;
    std::vector<std::vector<std::string>> rows;
    if (!csv::parse(read_text_file(dir / "manifest.csv"), rows)) {
        throw ParseError("manifest has an unterminated quote");
    }
    const std::vector<std::string> header{"id", "file", "field", "n", "k", "d", "properties", "citation"};
    if (rows.empty() || rows[0] != header) {
        throw ParseError("manifest header must be id,file,field,n,k,d,properties,citation");
    }
    for (size_t i = 1; i < rows.size(); i++) {
        const auto &r = rows[i];
        if (r.size() != header.size()) {
            throw ParseError("manifest line " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                             " fields, expected 8");
        }
        CorpusEntry e;
        e.id = r[0];
        e.file = r[1];
        try {
            e.field = FieldSpec::parse(r[2]);
        } catch (const UsageError &err) {
            throw ParseError("manifest line " + std::to_string(i + 1) + ": " + err.what());
        }
        e.n = parse_int(r[3], "n", i + 1);
        e.k = parse_int(r[4], "k", i + 1);
        e.d = parse_int(r[5], "d", i + 1);
        std::istringstream props(r[6]);
        std::string p;
        while (std::getline(props, p, ';')) {
            if (p == "lcd") {
                e.lcd = true;
            } else if (p == "odd-like") {
                e.odd_like = true;
            } else if (p == "optional") {
                e.optional = true;
            } else if (p.starts_with("wd=")) {
                e.weight_distribution = parse_distribution(p.substr(3), e.n, i + 1);
            } else if (!p.empty()) {
                throw ParseError("manifest line " + std::to_string(i + 1) + ": unknown property '" + p + "'");
            }
        }
        e.citation = r[7];
        c.entries_.push_back(std::move(e));
    }
    return c;
}

const CorpusEntry &Corpus::find(const std::string &id) const {
    for (const auto &e : entries_) {
        if (e.id == id) {
            return e;
        }
    }
    throw UsageError("no corpus entry '" + id + "'");
}

Replay Corpus::replay(const CorpusEntry &e) const {
    std::filesystem::path p = dir_ / e.file;
    if (p.extension() == ".rec") {
        return replay_file(p);
    }
    return {read_code(p), {}};
}

LinearCode Corpus::code(const CorpusEntry &e) const {
    return replay(e).result();
}

std::string_view status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass:
            return "PASS";
        case CheckResult::Status::Fail:
            return "FAIL";
        case CheckResult::Status::Skipped:
            return "SKIP";
        default:
            return "UNAVAILABLE";
    }
}

CheckResult check_entry(const Corpus &corpus, const CorpusEntry &e, const EnumerationOptions &opts) {
    using S = CheckResult::Status;
    std::optional<LinearCode> code;
    try {
        code = corpus.code(e);
    } catch (const MissingBaseError &err) {
        return {e.id, S::Unavailable, err.what()};
    } catch (const Error &err) {
        return {e.id, S::Fail, err.what()};
    }
    std::vector<std::string> problems;
    const LinearCode &c = *code;
    if (c.field() != e.field) {
        problems.push_back("field " + c.field().tag() + " != " + e.field.tag());
    }
    if (static_cast<int>(c.length()) != e.n || static_cast<int>(c.dimension()) != e.k) {
        problems.push_back("parameters [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) +
                           "] != [" + std::to_string(e.n) + "," + std::to_string(e.k) + "]");
    }
    bool lcd = is_lcd(c);
    if (lcd != e.lcd) {
        problems.push_back(std::string("LCD=") + (lcd ? "true" : "false"));
    }
    std::string dist;
    try {
        int d = min_weight(c, Strategy::BrouwerZimmermann, opts);
        dist = "d=" + std::to_string(d);
        if (d != e.d) {
            problems.push_back("d=" + std::to_string(d) + " != " + std::to_string(e.d));
        }
    } catch (const BudgetExceededError &err) {
        problems.push_back("d not determined: " + std::string(err.what()));
    }
    if (e.odd_like && (c.field().order() != 2 || is_even_like(c))) {
        problems.push_back("not odd-like");
    }
    if (e.weight_distribution) {
        try {
            auto wd = weight_distribution(c, opts);
            if (wd.counts != *e.weight_distribution) {
                problems.push_back("weight distribution differs");
            }
        } catch (const BudgetExceededError &err) {
            problems.push_back(err.what());
        }
    }
    if (!problems.empty()) {
        std::string detail;
        for (const auto &p : problems) {
            detail += (detail.empty() ? "" : "; ") + p;
        }
        return {e.id, S::Fail, detail};
    }
    return {e.id, S::Pass,
            "[" + std::to_string(e.n) + "," + std::to_string(e.k) + "," + std::to_string(e.d) + "] LCD=" +
                (lcd ? "true " : "false ") + dist};
}

std::vector<CheckResult> check_corpus(const Corpus &corpus, bool include_optional, const EnumerationOptions &opts) {
    std::vector<CheckResult> out;
    for (const auto &e : corpus.entries()) {
        if (e.optional && !include_optional) {
            out.push_back({e.id, CheckResult::Status::Skipped, "optional (base code not shipped)"});
            continue;
        }
        out.push_back(check_entry(corpus, e, opts));
    }
    return out;
}

int seed_verified_witnesses(BoundsTable &table, const Corpus &corpus, const EnumerationOptions &opts) {
    int added = 0;
    for (const auto &e : corpus.entries()) {
        if (e.optional || e.field != table.field() || !table.contains(e.n, e.k)) {
            continue;
        }
        if (check_entry(corpus, e, opts).status != CheckResult::Status::Pass) {
            continue;
        }
        table.seed(e.n, e.k, e.d, std::nullopt, SeedKind::Witness, "verified:" + e.id);
        added++;
    }
    return added;
}

BoundsTable build_bounds_table(FieldSpec field, int n1, int n2, std::string_view seeds_csv, const Corpus *corpus,
                               const EnumerationOptions &opts) {
    BoundsTable table(field, n2);
    load_seeds(table, seeds_csv);
    if (corpus) {
        seed_verified_witnesses(table, *corpus, opts);
    }
    if (field == FieldSpec::gf3()) {
        seed_ternary_exact(table, n1, n2);
    }
    propagate(table);
    return table;
}

}  // namespace lcdkit
