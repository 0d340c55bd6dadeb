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

#include "lcdkit/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "lcdkit/bounds.h"
#include "lcdkit/code_io.h"
#include "lcdkit/construct.h"
#include "lcdkit/corpus.h"
#include "lcdkit/eaqecc.h"
#include "lcdkit/enumerate.h"
#include "lcdkit/errors.h"
#include "lcdkit/record.h"

#ifndef LCDKIT_DEFAULT_SEEDS
#define LCDKIT_DEFAULT_SEEDS "data/bounds_seeds.csv"
#endif

namespace lcdkit {

namespace {

std::string params(const LinearCode &c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
}

std::string one_based(const std::vector<size_t> &t) {
    std::string s = "{";
    for (size_t i = 0; i < t.size(); i++) {
        s += (i ? "," : "") + std::to_string(t[i] + 1);
    }
    return s + "}";
}

std::string format_distribution(const std::vector<std::uint64_t> &counts) {
    std::string s;
    for (size_t w = 0; w < counts.size(); w++) {
        if (counts[w] != 0) {
            s += (s.empty() ? "" : " ") + std::to_string(w) + ":" + std::to_string(counts[w]);
        }
    }
    return s;
}

// "d=7" when exact, otherwise the upper bound with an explicit qualifier.
std::string format_distance(const Distance &d) {
    if (d.exact) {
        return "d=" + std::to_string(d.value);
    }
    return "d<=" + std::to_string(d.value) + " (proven >=" + std::to_string(d.lower) + ", budget exhausted)";
}

bool fits(const LinearCode &c, const EnumerationOptions &opts) {
    std::uint64_t cap = opts.cap.value_or(default_cap(c.field()));
    std::uint64_t total = 1;
    for (size_t i = 0; i < c.dimension(); i++) {
        if (total > cap / static_cast<std::uint64_t>(c.field().order())) {
            return false;
        }
        total *= static_cast<std::uint64_t>(c.field().order());
    }
    return total <= cap;
}

std::string lcd_flag(const LinearCode &c) {
    return std::string("LCD=") + (is_lcd(c) ? "true" : "false");
}

struct Context {
    std::ostream &out;
    std::ostream &err;
    EnumerationOptions opts;
};

int cmd_verify(Context &ctx, const std::string &file) {
    LinearCode c = read_code(file);
    ctx.out << "field=" << c.field().tag() << " n=" << c.length() << " k=" << c.dimension()
            << " rank=" << c.dimension() << "\n";
    ctx.out << "hull dim=" << hull(c).dim << "\n";
    Distance d;
    if (fits(c, ctx.opts)) {
        WeightDistribution wd = weight_distribution(c, ctx.opts);
        ctx.out << "weight distribution: " << format_distribution(wd.counts) << "\n";
        d = {wd.min_weight, true, wd.min_weight};
    } else {
        ctx.out << "weight distribution: not enumerated (q^k exceeds cap)\n";
        d = estimate_min_weight(c, Strategy::BrouwerZimmermann, ctx.opts);
    }
    ctx.out << lcd_flag(c) << " " << format_distance(d);
    if (c.field().order() == 2) {
        ctx.out << " odd-like=" << (is_even_like(c) ? "false" : "true");
    }
    ctx.out << "\n";
    return d.exact ? kExitOk : kExitMismatch;
}

int cmd_hull(Context &ctx, const std::string &file) {
    LinearCode c = read_code(file);
    HullInfo h = hull(c);
    ctx.out << "hull dim=" << h.dim << " T=" << one_based(h.pivot_set) << "\n";
    for (size_t r = 0; r < h.basis.rows(); r++) {
        ctx.out << format_vector(c.field(), h.basis.row(r)) << "\n";
    }
    return kExitOk;
}

// Reports are '#' comment lines followed by the code, so stdout is itself a code file.
void emit_code(Context &ctx, const LinearCode &c, const std::string &output) {
    if (output.empty()) {
        ctx.out << format_code(c);
    } else {
        write_code(output, c);
        ctx.out << "# written to " << output << "\n";
    }
}

int cmd_shorten_lcd(Context &ctx, const std::string &file, const std::string &output) {
    LinearCode c = read_code(file);
    LcdReduction r = shorten_to_lcd(c);
    Distance d = estimate_min_weight(r.code, Strategy::BrouwerZimmermann, ctx.opts);
    ctx.out << "# shortened " << params(c) << " on T=" << one_based(r.coordinates) << "\n";
    ctx.out << "# " << params(r.code) << " " << lcd_flag(r.code) << " " << format_distance(d) << "\n";
    emit_code(ctx, r.code, output);
    return d.exact ? kExitOk : kExitMismatch;
}

int cmd_puncture_lcd(Context &ctx, const std::string &file, const std::string &output) {
    LinearCode c = read_code(file);
    LcdReduction r = puncture_to_lcd(c, ctx.opts);
    Distance d = estimate_min_weight(r.code, Strategy::BrouwerZimmermann, ctx.opts);
    ctx.out << "# punctured " << params(c) << " on T=" << one_based(r.coordinates) << "\n";
    ctx.out << "# " << params(r.code) << " " << lcd_flag(r.code) << " " << format_distance(d) << "\n";
    emit_code(ctx, r.code, output);
    return d.exact ? kExitOk : kExitMismatch;
}

struct ExtendArgs {
    std::string file;
    int method = 1;
    std::string vector;
    bool search = false;
    int target = 0;
    std::uint64_t budget = 1u << 20;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_extend(Context &ctx, const ExtendArgs &a) {
    if (a.search == !a.vector.empty()) {
        throw UsageError("extend needs exactly one of --vector and --search");
    }
    LinearCode c = read_code(a.file);
    Method method = a.method == 1 ? Method::M1 : Method::M2;
    std::string name = a.method == 1 ? "M1" : "M2";
    if (!a.search) {
        ExtensionVector v = ExtensionVector::make(c, parse_vector(c.field(), a.vector), method);
        if (v.degenerate()) {
            ctx.err << "warning: x = 0 is valid but gives minimum weight 1\n";
        }
        LinearCode e = method == Method::M1 ? extend_m1(c, v) : extend_m2(c, v);
        Distance d = estimate_min_weight(e, Strategy::BrouwerZimmermann, ctx.opts);
        ctx.out << "# " << name << " on " << params(c) << " with " << format_vector(c.field(), v.vector())
                << "\n";
        ctx.out << "# " << params(e) << " " << lcd_flag(e) << " " << format_distance(d) << "\n";
        emit_code(ctx, e, a.output);
        return d.exact ? kExitOk : kExitMismatch;
    }
    SearchOptions so;
    so.method = method;
    so.target = a.target;
    so.budget = a.budget;
    so.seed = a.seed;
    so.enumeration = ctx.opts;
    SearchResult r = search_extend(c, so);
    ctx.out << "# " << name << " search on " << params(c) << ": " << (r.exhaustive ? "exhaustive" : "sampled")
            << " candidates=" << r.candidates << " seed=" << a.seed << "\n";
    ctx.out << "# best " << format_vector(c.field(), r.vector) << "\n";
    ctx.out << "# " << params(r.code) << " " << lcd_flag(r.code) << " d=" << r.distance;
    if (a.target > 0) {
        ctx.out << " target=" << a.target << (r.target_reached ? " reached" : " not reached");
    }
    ctx.out << "\n";
    emit_code(ctx, r.code, a.output);
    return a.target > 0 && !r.target_reached ? kExitMismatch : kExitOk;
}

int cmd_minweight(Context &ctx, const std::string &file, const std::string &strategy) {
    LinearCode c = read_code(file);
    Distance d = estimate_min_weight(c, strategy == "bz" ? Strategy::BrouwerZimmermann : Strategy::Exhaustive,
                                     ctx.opts);
    ctx.out << params(c) << " " << format_distance(d) << " exact=" << (d.exact ? "true" : "false") << "\n";
    return d.exact ? kExitOk : kExitMismatch;
}

int cmd_replay(Context &ctx, const std::string &file, const std::string &output) {
    Replay r = replay_file(file);
    ConstructionRecord rec = read_record(file);
    auto describe = [&](const LinearCode &c) {
        Distance d = estimate_min_weight(c, Strategy::BrouwerZimmermann, ctx.opts);
        return std::pair{params(c) + " " + lcd_flag(c) + " " + format_distance(d), d.exact};
    };
    bool exact = true;
    auto [base_line, base_exact] = describe(r.base);
    exact = exact && base_exact;
    ctx.out << "# base " << rec.base << ": " << base_line << "\n";
    for (size_t i = 0; i < r.intermediates.size(); i++) {
        auto [line, e] = describe(r.intermediates[i]);
        exact = exact && e;
        ctx.out << "# step " << i + 1 << ": " << line << "\n";
    }
    emit_code(ctx, r.result(), output);
    return exact ? kExitOk : kExitMismatch;
}

struct Range {
    int n1, n2, k1, k2;
};

Range parse_range(const std::string &s) {
    Range r{};
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
    std::istringstream in(s);
    if (!(in >> r.n1 >> c1 >> c2 >> r.n2 >> c3 >> r.k1 >> c4 >> c5 >> r.k2) || c1 != '.' || c2 != '.' ||
        c3 != ',' || c4 != '.' || c5 != '.' || !(in >> std::ws).eof()) {
        throw UsageError("range must look like n1..n2,k1..k2, got '" + s + "'");
    }
    if (r.n1 < 1 || r.n1 > r.n2 || r.k1 < 1 || r.k1 > r.k2 || r.n2 > 512) {
        throw UsageError("empty or out-of-range bounds range '" + s + "'");
    }
    return r;
}

struct BoundsArgs {
    std::string field = "gf2";
    std::string seeds = LCDKIT_DEFAULT_SEEDS;
    std::string range;
    std::string format = "md";
    std::string explain;
    bool no_corpus = false;
    std::string corpus_dir;
};

int cmd_bounds(Context &ctx, const BoundsArgs &a) {
    FieldSpec field = FieldSpec::parse(a.field);
    Range r = parse_range(a.range);
    std::optional<Corpus> corpus;
    if (!a.no_corpus) {
        corpus = Corpus::load(a.corpus_dir.empty() ? default_corpus_dir() : std::filesystem::path(a.corpus_dir));
    }
    BoundsTable table =
        build_bounds_table(field, r.n1, r.n2, read_text_file(a.seeds), corpus ? &*corpus : nullptr, ctx.opts);
    ctx.out << render(table, r.n1, r.n2, r.k1, r.k2, a.format == "csv" ? RenderFormat::Csv : RenderFormat::Markdown);
    if (!a.explain.empty()) {
        int n = 0, k = 0;
        char comma = 0;
        std::istringstream in(a.explain);
        if (!(in >> n >> comma >> k) || comma != ',' || !table.contains(n, k)) {
            throw UsageError("--explain needs a cell n,k inside the range");
        }
        ctx.out << explain(table, n, k);
    }
    return kExitOk;
}

int cmd_eaqecc(Context &ctx, long long n, long long k, long long d, std::optional<long long> s) {
    EaqeccParams p = s ? family(n, k, d, *s) : from_hermitian_lcd(n, k, d);
    ctx.out << p.to_string() << "\n";
    return kExitOk;
}

int cmd_corpus_check(Context &ctx, const std::string &dir, bool include_optional) {
    Corpus corpus = Corpus::load(dir.empty() ? default_corpus_dir() : std::filesystem::path(dir));
    int counts[4] = {0, 0, 0, 0};
    for (const CheckResult &r : check_corpus(corpus, include_optional, ctx.opts)) {
        counts[static_cast<int>(r.status)]++;
        ctx.out << status_name(r.status) << " " << r.id << " " << r.detail << "\n";
    }
    ctx.out << "corpus-check: pass=" << counts[0] << " fail=" << counts[1] << " skipped=" << counts[2]
            << " unavailable=" << counts[3] << "\n";
    return counts[1] == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Linear complementary dual code toolkit", "lcdkit"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 0;
    std::optional<std::uint64_t> cap;
    app.add_option("--threads", threads, "Worker threads (0 = machine parallelism)");

    std::string file, output;
    auto add_file = [&](CLI::App *sub) {
        sub->add_option("file", file, "Code file")->required();
    };
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("-o,--output", output, "Write the resulting code here instead of stdout");
    };

    CLI::App *verify = app.add_subcommand("verify", "Rank, LCD, minimum weight, weight distribution");
    add_file(verify);
    verify->add_option("--cap", cap, "Enumeration cap");

    CLI::App *hull_cmd = app.add_subcommand("hull", "Hull dimension, basis and pivot set");
    add_file(hull_cmd);

    CLI::App *shorten_cmd = app.add_subcommand("shorten-lcd", "Shorten on the hull pivot set");
    add_file(shorten_cmd);
    add_output(shorten_cmd);
    shorten_cmd->add_option("--cap", cap, "Enumeration cap");

    CLI::App *puncture_cmd = app.add_subcommand("puncture-lcd", "Puncture on the pivot set of the dual's hull");
    add_file(puncture_cmd);
    add_output(puncture_cmd);
    puncture_cmd->add_option("--cap", cap, "Enumeration cap");

    ExtendArgs ext;
    CLI::App *extend = app.add_subcommand("extend", "Extend an LCD code by Method 1 or Method 2");
    extend->add_option("file", ext.file, "Code file")->required();
    extend->add_option("--method", ext.method, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    extend->add_option("--vector", ext.vector, "Extension vector in the field alphabet");
    extend->add_flag("--search", ext.search, "Search the dual for the best vector");
    extend->add_option("--target", ext.target, "Stop the search at this distance");
    extend->add_option("--budget", ext.budget, "Candidates considered by the search");
    extend->add_option("--seed", ext.seed, "Sampling seed");
    extend->add_option("--cap", cap, "Enumeration cap");
    extend->add_option("-o,--output", ext.output, "Write the resulting code here instead of stdout");

    std::string strategy = "bz";
    CLI::App *minweight = app.add_subcommand("minweight", "Minimum weight");
    add_file(minweight);
    minweight->add_option("--strategy", strategy, "exhaustive or bz")->check(CLI::IsMember({"exhaustive", "bz"}));
    minweight->add_option("--cap", cap, "Enumeration cap");

    CLI::App *replay_cmd = app.add_subcommand("replay", "Replay a construction record");
    replay_cmd->add_option("record", file, "Record file")->required();
    add_output(replay_cmd);
    replay_cmd->add_option("--cap", cap, "Enumeration cap");

    BoundsArgs ba;
    CLI::App *bounds = app.add_subcommand("bounds", "Propagate and render a bounds table");
    bounds->add_option("--field", ba.field, "gf2, gf3 or gf4h")->check(CLI::IsMember({"gf2", "gf3", "gf4h"}));
    bounds->add_option("--seeds", ba.seeds, "Seed CSV");
    bounds->add_option("--range", ba.range, "n1..n2,k1..k2")->required();
    bounds->add_option("--format", ba.format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
    bounds->add_option("--explain", ba.explain, "Print the derivation of cell n,k");
    bounds->add_flag("--no-corpus", ba.no_corpus, "Do not add verified corpus codes as witnesses");
    bounds->add_option("--corpus-dir", ba.corpus_dir, "Corpus directory");

    long long en = 0, ek = 0, ed = 0;
    std::optional<long long> es;
    CLI::App *eaqecc = app.add_subcommand("eaqecc", "EAQECC parameters from a Hermitian LCD [n,k,d] code");
    eaqecc->add_option("n", en)->required();
    eaqecc->add_option("k", ek)->required();
    eaqecc->add_option("d", ed)->required();
    eaqecc->add_option("--s", es, "Family member s");

    bool include_optional = false;
    std::string corpus_dir;
    CLI::App *corpus_cmd = app.add_subcommand("corpus-check", "Verify every corpus claim");
    corpus_cmd->add_flag("--include-optional", include_optional, "Also try entries whose base is not shipped");
    corpus_cmd->add_option("--dir", corpus_dir, "Corpus directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Context ctx{out, err, EnumerationOptions{cap, threads}};
    try {
        if (verify->parsed()) return cmd_verify(ctx, file);
        if (hull_cmd->parsed()) return cmd_hull(ctx, file);
        if (shorten_cmd->parsed()) return cmd_shorten_lcd(ctx, file, output);
        if (puncture_cmd->parsed()) return cmd_puncture_lcd(ctx, file, output);
        if (extend->parsed()) return cmd_extend(ctx, ext);
        if (minweight->parsed()) return cmd_minweight(ctx, file, strategy);
        if (replay_cmd->parsed()) return cmd_replay(ctx, file, output);
        if (bounds->parsed()) return cmd_bounds(ctx, ba);
        if (eaqecc->parsed()) return cmd_eaqecc(ctx, en, ek, ed, es);
        if (corpus_cmd->parsed()) return cmd_corpus_check(ctx, corpus_dir, include_optional);
    } catch (const RankDeficientError &e) {
        err << "error: rank deficient: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotInDualError &e) {
        err << "error: vector not in the dual: " << e.what() << "\n";
        return kExitUsage;
    } catch (const WeightConditionError &e) {
        err << "error: weight condition fails: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError &e) {
        err << "error: precondition: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MissingBaseError &e) {
        err << "error: base code unavailable: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceededError &e) {
        err << "error: budget exhausted: " << e.what() << " (best d<=" << e.upper_bound << ", proven >="
            << e.lower_bound << ")\n";
        return kExitMismatch;
    } catch (const ConflictError &e) {
        err << "error: conflicting bounds: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const EmptyCodeError &e) {
        err << "error: empty result: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace lcdkit
