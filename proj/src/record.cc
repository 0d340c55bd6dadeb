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

#include "lcdkit/record.h"

#include <sstream>

#include "lcdkit/code_io.h"
#include "lcdkit/construct.h"
#include "lcdkit/errors.h"

namespace lcdkit {

namespace {

std::vector<size_t> parse_coordinates(const std::string &text, size_t line) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || v == 0) {
            throw ParseError("line " + std::to_string(line) + ": coordinate '" + item +
                             "' is not a positive integer (coordinates are 1-based)");
        }
        out.push_back(v - 1);
    }
    if (out.empty()) {
        throw ParseError("line " + std::to_string(line) + ": empty coordinate list");
    }
    return out;
}

constexpr int kMaxBaseDepth = 32;

Replay replay_at_depth(const ConstructionRecord &record, const std::filesystem::path &dir, int depth);

LinearCode load_base(const std::string &base, const std::filesystem::path &dir, int depth) {
    if (depth > kMaxBaseDepth) {
        throw ParseError("record bases nest too deeply (cycle?)");
    }
    std::filesystem::path p = base;
    if (p.is_relative()) {
        p = dir / p;
    }
    if (p.extension() == ".rec") {
        return replay_at_depth(read_record(p), p.parent_path(), depth + 1).result();
    }
    return read_code(p);
}

Replay replay_at_depth(const ConstructionRecord &record, const std::filesystem::path &dir, int depth) {
    if (record.base_missing()) {
        throw MissingBaseError("base code unavailable: " + record.base.substr(8));
    }
    LinearCode base = load_base(record.base, dir, depth);
    auto steps = apply_steps(base, record.steps);
    return {std::move(base), std::move(steps)};
}

}  // namespace

ConstructionRecord parse_record(std::string_view text) {
    ConstructionRecord r;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t number = 0;
    bool have_base = false;
    while (std::getline(in, line)) {
        number++;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') {
            continue;
        }
        std::string arg, extra;
        ls >> arg;
        if (ls >> extra) {
            throw ParseError("line " + std::to_string(number) + ": unexpected text after '" + arg + "'");
        }
        if (word == "base") {
            if (have_base) {
                throw ParseError("line " + std::to_string(number) + ": second base line");
            }
            if (arg.empty()) {
                throw ParseError("line " + std::to_string(number) + ": base needs a path");
            }
            r.base = arg;
            have_base = true;
            continue;
        }
        if (!have_base) {
            throw ParseError("line " + std::to_string(number) + ": steps must follow the base line");
        }
        Step s{};
        if (word == "shorten" || word == "puncture") {
            s.kind = word == "shorten" ? Step::Kind::Shorten : Step::Kind::Puncture;
            s.coordinates = parse_coordinates(arg, number);
        } else if (word == "extend-m1" || word == "extend-m2") {
            s.kind = word == "extend-m1" ? Step::Kind::ExtendM1 : Step::Kind::ExtendM2;
            if (arg.empty()) {
                throw ParseError("line " + std::to_string(number) + ": " + word + " needs a vector");
            }
            s.symbols = arg;
        } else if (word == "pad") {
            if (!arg.empty()) {
                throw ParseError("line " + std::to_string(number) + ": pad takes no argument");
            }
            s.kind = Step::Kind::Pad;
        } else {
            throw ParseError("line " + std::to_string(number) + ": unknown step '" + word + "'");
        }
        r.steps.push_back(std::move(s));
    }
    if (!have_base) {
        throw ParseError("record has no base line");
    }
    return r;
}

ConstructionRecord read_record(const std::filesystem::path &path) {
    return parse_record(read_text_file(path));
}

std::string format_record(const ConstructionRecord &r) {
    std::string out = "base " + r.base + "\n";
    for (const auto &s : r.steps) {
        switch (s.kind) {
            case Step::Kind::Shorten:
            case Step::Kind::Puncture: {
                out += s.kind == Step::Kind::Shorten ? "shorten " : "puncture ";
                for (size_t i = 0; i < s.coordinates.size(); i++) {
                    out += (i ? "," : "") + std::to_string(s.coordinates[i] + 1);
                }
                break;
            }
            case Step::Kind::ExtendM1:
                out += "extend-m1 " + s.symbols;
                break;
            case Step::Kind::ExtendM2:
                out += "extend-m2 " + s.symbols;
                break;
            case Step::Kind::Pad:
                out += "pad";
                break;
        }
        out += "\n";
    }
    return out;
}

LinearCode apply_step(const LinearCode &c, const Step &step) {
    switch (step.kind) {
        case Step::Kind::Shorten:
            return shorten(c, step.coordinates);
        case Step::Kind::Puncture:
            return puncture(c, step.coordinates);
        case Step::Kind::Pad:
            return pad_zero_column(c);
        case Step::Kind::ExtendM1:
            return extend_m1(c, ExtensionVector::make(c, parse_vector(c.field(), step.symbols), Method::M1));
        case Step::Kind::ExtendM2:
            return extend_m2(c, ExtensionVector::make(c, parse_vector(c.field(), step.symbols), Method::M2));
    }
    throw std::logic_error("unknown step kind");
}

std::vector<LinearCode> apply_steps(const LinearCode &base, const std::vector<Step> &steps) {
    std::vector<LinearCode> out;
    out.reserve(steps.size());
    const LinearCode *cur = &base;
    for (const auto &s : steps) {
        out.push_back(apply_step(*cur, s));
        cur = &out.back();
    }
    return out;
}

Replay replay(const ConstructionRecord &record, const std::filesystem::path &dir) {
    return replay_at_depth(record, dir, 0);
}

Replay replay_file(const std::filesystem::path &path) {
    return replay(read_record(path), path.parent_path());
}

}  // namespace lcdkit
