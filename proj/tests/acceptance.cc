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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lcdkit/bounds.h"
#include "lcdkit/code_io.h"
#include "lcdkit/construct.h"
#include "lcdkit/corpus.h"
#include "lcdkit/eaqecc.h"
#include "lcdkit/enumerate.h"
#include "lcdkit/errors.h"
#include "lcdkit/record.h"
#include "property_checks.h"

namespace lcdkit {
namespace {

namespace fs = std::filesystem;
using testing::CheckReport;
using testing::Rng;

const fs::path kCorpus = LCDKIT_CORPUS_DIR;
const fs::path kData = LCDKIT_TEST_DATA_DIR;

// Collects failure notes for one criterion.
struct Outcome {
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string &msg) {
        if (!ok) {
            problems.push_back(msg);
        }
    }
    void take(const std::string &name, const CheckReport &r, int min_trials) {
        notes.push_back(name + ": " + std::to_string(r.trials) + " trials");
        expect(r.trials >= min_trials, name + ": only " + std::to_string(r.trials) + " trials");
        expect(r.violations == 0, name + ": " + std::to_string(r.violations) + " violations, first: " + r.first);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::vector<std::string>> read_rows(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> r;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            r.push_back(item);
        }
        rows.push_back(r);
    }
    return rows;
}

std::vector<std::uint64_t> sparse(size_t n, std::initializer_list<std::pair<size_t, std::uint64_t>> terms) {
    std::vector<std::uint64_t> v(n + 1, 0);
    for (auto [w, a] : terms) {
        v[w] = a;
    }
    return v;
}

std::string params(const LinearCode &c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
}

BoundsTable full_table(FieldSpec f, int n1, int n2, const Corpus &corpus) {
    return build_bounds_table(f, n1, n2, read_text_file(LCDKIT_SEEDS_FILE), &corpus);
}

void binary_counterexamples(Outcome &o) {
    struct Case {
        const char *file;
        const char *x;
        std::vector<std::uint64_t> wd;
    };
    const std::vector<Case> cases{
        {"b_13_7_4.code", "1001110001100",
         sparse(14, {{0, 1}, {4, 24}, {5, 36}, {6, 36}, {7, 60}, {8, 45}, {9, 28}, {10, 20}, {11, 4}, {12, 2}})},
        {"b_15_9_4.code", "111111011001111",
         sparse(16, {{0, 1}, {4, 43}, {5, 81}, {6, 96}, {7, 189}, {8, 207}, {9, 162}, {10, 144}, {11, 66},
                     {12, 21}, {13, 13}, {15, 1}})},
    };
    for (const Case &cs : cases) {
        auto t0 = std::chrono::steady_clock::now();
        LinearCode c = read_code(kCorpus / cs.file);
        LinearCode e = extend_m1(c, ExtensionVector::make(c, parse_vector(c.field(), cs.x), Method::M1));
        WeightDistribution wd = weight_distribution(e);
        double secs = seconds_since(t0);
        std::string tag = params(e);
        o.expect(e.length() == c.length() + 1 && e.dimension() == c.dimension() + 1, tag + ": wrong parameters");
        o.expect(is_lcd(e), tag + ": not LCD");
        o.expect(wd.odd_like && !is_even_like(e), tag + ": not odd-like");
        o.expect(wd.min_weight == 4 && min_weight(e, Strategy::Exhaustive) == 4, tag + ": d != 4");
        o.expect(wd.counts == cs.wd, tag + ": weight distribution differs");
        o.expect(secs < 1.0, tag + ": took " + std::to_string(secs) + " s");
        o.notes.push_back(tag + " in " + std::to_string(secs) + " s");
    }
}

void ternary_printed(Outcome &o) {
    auto t0 = std::chrono::steady_clock::now();
    for (auto [file, n, k, d] : {std::tuple{"t_19_6_9.code", 19, 6, 9}, {"t_20_5_11.code", 20, 5, 11},
                                 {"t_20_6_10.code", 20, 6, 10}, {"t_20_8_8.code", 20, 8, 8}}) {
        LinearCode c = read_code(kCorpus / file);
        std::string tag = file;
        o.expect(c.field() == FieldSpec::gf3(), tag + ": not ternary");
        o.expect(c.length() == static_cast<size_t>(n) && c.dimension() == static_cast<size_t>(k),
                 tag + ": parameters " + params(c));
        o.expect(is_lcd(c), tag + ": not LCD");
        int w = min_weight(c, Strategy::Exhaustive);
        o.expect(w == d, tag + ": d=" + std::to_string(w));
    }
    double secs = seconds_since(t0);
    o.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
    o.notes.push_back("4 codes in " + std::to_string(secs) + " s");
}

void ternary_chains(Outcome &o) {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::vector<std::tuple<std::string, int, int, int>>> chains{
        {{"t_19_6_9.code", 19, 6, 9}, {"t_20_7_9.rec", 20, 7, 9}},
        {{"t_20_6_10.code", 20, 6, 10}, {"t_21_7_9.rec", 21, 7, 9}, {"t_22_8_9.rec", 22, 8, 9},
         {"t_23_9_9.rec", 23, 9, 9}},
        {{"t_20_5_11.code", 20, 5, 11}, {"t_21_6_10.rec", 21, 6, 10}, {"t_22_7_10.rec", 22, 7, 10},
         {"t_23_8_10.rec", 23, 8, 10}},
        {{"t_20_8_8.code", 20, 8, 8}, {"t_21_9_8.rec", 21, 9, 8}},
    };
    int links = 0;
    for (const auto &chain : chains) {
        for (size_t i = 0; i < chain.size(); i++) {
            const auto &[file, n, k, d] = chain[i];
            if (i > 0) {
                // Each record must build on the previous link.
                const std::string &prev = std::get<0>(chain[i - 1]);
                o.expect(read_record(kCorpus / file).base == prev, file + ": base is not " + prev);
            }
            Replay r = file.ends_with(".rec") ? replay_file(kCorpus / file) : Replay{read_code(kCorpus / file), {}};
            const LinearCode &c = r.result();
            o.expect(c.length() == static_cast<size_t>(n) && c.dimension() == static_cast<size_t>(k),
                     file + ": parameters " + params(c));
            o.expect(is_lcd(c), file + ": not LCD");
            int w = min_weight(c, Strategy::Exhaustive);
            o.expect(w == d, file + ": d=" + std::to_string(w) + ", want " + std::to_string(d));
            links++;
        }
    }
    double secs = seconds_since(t0);
    o.expect(secs < 30.0, "took " + std::to_string(secs) + " s");
    o.notes.push_back(std::to_string(links) + " codes in " + std::to_string(secs) + " s");
}

void derivation_rows(Outcome &o, const Corpus &corpus) {
    auto rows = read_rows(kData / "derivation_rows.csv");
    o.expect(rows.size() >= 40, "only " + std::to_string(rows.size()) + " rows");
    BoundsTable table = full_table(FieldSpec::gf2(), 29, 40, corpus);
    for (const auto &r : rows) {
        int n = std::stoi(r[0]), k = std::stoi(r[1]), d = std::stoi(r[2]);
        int n2 = std::stoi(r[3]), k2 = std::stoi(r[4]), d2 = std::stoi(r[5]);
        std::string name = "[" + r[0] + "," + r[1] + "," + r[2] + "] -> [" + r[3] + "," + r[4] + "," + r[5] + "]";
        std::vector<std::string> matching;
        for (const auto &id : lower_rule_ids(FieldSpec::gf2())) {
            auto got = lower_rule(id, FieldSpec::gf2(), n, k, d);
            if (got && got->n == n2 && got->k == k2 && got->d == d2) {
                matching.push_back(id);
            }
        }
        o.expect(matching == std::vector<std::string>{r[6]}, name + ": rules matched " +
                                                                  std::to_string(matching.size()) + ", want " + r[6]);
        const BoundsCell &cell = table.at(n2, k2);
        o.expect(cell.lower && cell.lower->value >= d2, name + ": table lower bound below " + r[5]);
    }
    o.notes.push_back(std::to_string(rows.size()) + " rows");
}

void grid(Outcome &o, const Corpus &corpus) {
    auto rows = read_rows(kData / "expected_grid.csv");
    BoundsTable b = full_table(FieldSpec::gf2(), 29, 40, corpus);
    BoundsTable t = full_table(FieldSpec::gf3(), 20, 25, corpus);
    int covered = 0;
    std::vector<std::string> uncovered;
    for (const auto &r : rows) {
        const BoundsTable &table = r[0] == "gf2" ? b : t;
        std::string cell = r[0] + " (" + r[1] + "," + r[2] + ")";
        std::string got = render_cell(table, std::stoi(r[1]), std::stoi(r[2]));
        if (got.empty()) {
            uncovered.push_back(cell);
            continue;
        }
        covered++;
        o.expect(got == r[3], cell + ": got " + got + ", want " + r[3]);
    }
    o.notes.push_back(std::to_string(covered) + " of " + std::to_string(rows.size()) + " cells covered");
    for (const std::string &u : uncovered) {
        o.notes.push_back("uncovered " + u);
    }
}

void properties(Outcome &o) {
    constexpr int kTrials = 500;
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(2026);
    for (auto f : testing::all_fields()) {
        o.take("is_lcd " + f.tag(), testing::check_is_lcd(f, kTrials, rng), kTrials);
        o.take("shorten_to_lcd " + f.tag(), testing::check_shorten_contract(f, kTrials, rng), kTrials);
        o.take("puncture_to_lcd " + f.tag(), testing::check_puncture_contract(f, kTrials, rng), kTrials);
        o.take("duality " + f.tag(), testing::check_shorten_puncture_duality(f, kTrials, rng), kTrials);
    }
    for (auto f : testing::method_fields()) {
        for (Method m : {Method::M1, Method::M2}) {
            std::string name = std::string("weight condition ") + (m == Method::M1 ? "M1 " : "M2 ") + f.tag();
            o.take(name, testing::check_weight_condition(f, m, kTrials, rng), 2 * kTrials);
        }
    }
    o.take("ternary hull growth", testing::check_ternary_hull_growth(kTrials, rng), kTrials);
    o.take("MacWilliams", testing::check_macwilliams(kTrials, rng), kTrials);
    double secs = seconds_since(t0);
    o.expect(secs < 120.0, "took " + std::to_string(secs) + " s");
    o.notes.push_back("total " + std::to_string(secs) + " s");
}

void decompose(Outcome &o) {
    auto t0 = std::chrono::steady_clock::now();
    o.take("decompose_m1 n<=6", testing::check_decompose_exhaustive(6), 1);
    double secs = seconds_since(t0);
    o.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
}

void orthonormalize(Outcome &o) {
    Rng rng(8);
    o.take("odd-like", testing::check_orthonormalize_odd_like(200, rng), 200);
    o.take("even-like", testing::check_even_like_not_orthonormalizable(200, rng), 200);
}

std::string gmp_family(long n, unsigned long k, long d, unsigned long s) {
    mpz_class four_k, four_k1;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpz_ui_pow_ui(four_k1.get_mpz_t(), 4, k - 1);
    mpz_class len = mpz_class(n) + (four_k - 1) / 3 * s;
    mpz_class dist = mpz_class(d) + four_k1 * s;
    mpz_class ebits = len - mpz_class(static_cast<long>(k));
    return "[[" + len.get_str() + "," + std::to_string(k) + "," + dist.get_str() + ";" + ebits.get_str() + "]]";
}

void eaqecc(Outcome &o) {
    for (auto [n, k, d, want] : {std::tuple{22, 12, 7, "[[22,12,7;10]]"}, {23, 13, 7, "[[23,13,7;10]]"},
                                 {24, 14, 7, "[[24,14,7;10]]"}, {25, 15, 7, "[[25,15,7;10]]"}}) {
        std::string got = from_hermitian_lcd(n, k, d).to_string();
        o.expect(got == want, got + " != " + want);
    }
    std::string fam = family(22, 12, 7, 1).to_string();
    std::string ref = gmp_family(22, 12, 7, 1);
    o.expect(fam == ref, fam + " != " + ref);
    o.notes.push_back(fam);
}

void hermitian(Outcome &o) {
    Rng rng(10);
    o.take("Hermitian M1", testing::check_hermitian_m1(500, rng), 1000);
}

void performance(Outcome &o) {
    Rng rng(40);
    LinearCode c = testing::random_code(FieldSpec::gf2(), 40, 23, rng);
    EnumerationOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    auto t0 = std::chrono::steady_clock::now();
    Distance a = estimate_min_weight(c, Strategy::Exhaustive, eight);
    double secs8 = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    Distance b = estimate_min_weight(c, Strategy::Exhaustive, one);
    double secs1 = seconds_since(t0);
    o.expect(a.exact && b.exact, "enumeration did not finish");
    o.expect(a == b, "1 and 8 threads disagree");
    o.expect(secs8 < 60.0, "8 threads took " + std::to_string(secs8) + " s");
    // Every codeword visited once.
    WeightDistribution wd = weight_distribution(c, eight);
    std::uint64_t total = 0;
    for (std::uint64_t x : wd.counts) {
        total += x;
    }
    o.expect(total == std::uint64_t{1} << 23, "weight distribution sums to " + std::to_string(total));
    o.expect(wd.min_weight == a.value, "weight distribution minimum differs");
    Distance bz = estimate_min_weight(c, Strategy::BrouwerZimmermann, eight);
    o.expect(bz.exact && bz.value == a.value, "Brouwer-Zimmermann gives " + std::to_string(bz.value));
    o.notes.push_back("[40,23] d=" + std::to_string(a.value) + ", 8 threads " + std::to_string(secs8) +
                      " s, 1 thread " + std::to_string(secs1) + " s, " +
                      std::to_string(resolve_threads(0)) + " hardware threads");
}

}  // namespace
}  // namespace lcdkit

int main() {
    using namespace lcdkit;
    Corpus corpus = Corpus::load(kCorpus);
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
        {"binary [14,8,4] and [16,10,4] odd-like LCD extensions", binary_counterexamples},
        {"ternary printed generator matrices", ternary_printed},
        {"ternary Method 1 chains", ternary_chains},
        {"single-rule derivation rows", [&](Outcome &o) { derivation_rows(o, corpus); }},
        {"binary and ternary bounds grids", [&](Outcome &o) { grid(o, corpus); }},
        {"randomized property suites", properties},
        {"odd-like decomposition for n <= 6", decompose},
        {"congruence orthonormalization", orthonormalize},
        {"EAQECC parameters", eaqecc},
        {"Hermitian Method 1 over GF(4)", hermitian},
        {"[40,23] exhaustive minimum weight", performance},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        bool ok = o.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << "\n";
        for (const std::string &n : o.notes) {
            std::cout << "    " << n << "\n";
        }
        for (const std::string &p : o.problems) {
            std::cout << "    ! " << p << "\n";
        }
        std::cout.flush();
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " of " : "all passed: ")
              << criteria.size() << " criteria\n";
    return failed ? 1 : 0;
}
