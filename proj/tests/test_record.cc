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

#include <gtest/gtest.h>

#include <fstream>

#include "lcdkit/code_io.h"
#include "lcdkit/construct.h"
#include "lcdkit/enumerate.h"
#include "lcdkit/errors.h"
#include "lcdkit/record.h"
#include "test_util.h"

namespace lcdkit {
namespace {

namespace fs = std::filesystem;

const fs::path kCorpus = LCDKIT_CORPUS_DIR;

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("lcdkit_record_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path &path() const {
        return path_;
    }
    void write(const std::string &name, const std::string &text) const {
        std::ofstream(path_ / name) << text;
    }

private:
    fs::path path_;
};

TEST(Record, parse_and_format) {
    ConstructionRecord r = parse_record(
        "# a comment\n"
        "base foo.code\n"
        "shorten 1,2,8\n"
        "\n"
        "puncture 3\n"
        "extend-m1 1102\n"
        "extend-m2 0w1W\n"
        "pad\n");
    EXPECT_EQ(r.base, "foo.code");
    ASSERT_EQ(r.steps.size(), 5u);
    EXPECT_EQ(r.steps[0].kind, Step::Kind::Shorten);
    EXPECT_EQ(r.steps[0].coordinates, (std::vector<size_t>{0, 1, 7}));
    EXPECT_EQ(r.steps[1].coordinates, std::vector<size_t>{2});
    EXPECT_EQ(r.steps[2].symbols, "1102");
    EXPECT_EQ(r.steps[3].kind, Step::Kind::ExtendM2);
    EXPECT_EQ(r.steps[4].kind, Step::Kind::Pad);
    std::string text = format_record(r);
    EXPECT_EQ(text, "base foo.code\nshorten 1,2,8\npuncture 3\nextend-m1 1102\nextend-m2 0w1W\npad\n");
    EXPECT_EQ(format_record(parse_record(text)), text);
    EXPECT_TRUE(parse_record("base missing:thing\n").base_missing());
    EXPECT_FALSE(r.base_missing());
}

TEST(Record, parse_errors) {
    EXPECT_THROW(parse_record(""), ParseError);
    EXPECT_THROW(parse_record("shorten 1\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nbase b\n"), ParseError);
    EXPECT_THROW(parse_record("base\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nshorten 0\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nshorten 1,x\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nshorten\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nextend-m1\n"), ParseError);
    EXPECT_THROW(parse_record("base a\npad 3\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nrotate 1\n"), ParseError);
    EXPECT_THROW(parse_record("base a\nshorten 1 2\n"), ParseError);
    try {
        parse_record("base a\n\nfrob 1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(Replay, printed_extensions) {
    Replay r = replay_file(kCorpus / "b_14_8_4.rec");
    EXPECT_EQ(r.base.length(), 13u);
    ASSERT_EQ(r.intermediates.size(), 1u);
    EXPECT_EQ(r.result().length(), 14u);
    EXPECT_EQ(r.result().dimension(), 8u);
    EXPECT_EQ(min_weight(r.result(), Strategy::Exhaustive), 4);

    Replay t = replay_file(kCorpus / "t_20_7_9.rec");
    EXPECT_EQ(t.result().length(), 20u);
    EXPECT_EQ(t.result().dimension(), 7u);
    EXPECT_TRUE(is_lcd(t.result()));
    EXPECT_EQ(min_weight(t.result(), Strategy::Exhaustive), 9);
}

TEST(Replay, nested_records) {
    // t_21_7_9 starts from t_20_6_10.code; t_22_8_9 starts from the t_21_7_9 record.
    Replay r = replay_file(kCorpus / "t_22_8_9.rec");
    EXPECT_EQ(r.result().length(), 22u);
    EXPECT_EQ(r.result().dimension(), 8u);
    EXPECT_EQ(r.base.length(), 21u);
    EXPECT_TRUE(is_lcd(r.result()));
}

TEST(Replay, missing_base) {
    EXPECT_THROW(replay_file(kCorpus / "b_29_11_9.rec"), MissingBaseError);
    // Missing bases propagate through nesting.
    EXPECT_THROW(replay_file(kCorpus / "b_30_15_7.rec"), MissingBaseError);
    try {
        replay(parse_record("base missing:BKLC_[30,11,10]\n"), ".");
        FAIL();
    } catch (const MissingBaseError &e) {
        EXPECT_NE(std::string(e.what()).find("BKLC_[30,11,10]"), std::string::npos);
    }
}

TEST(Replay, steps_match_library_calls) {
    TempDir dir;
    testing::Rng rng(60);
    LinearCode c = testing::random_lcd_code(FieldSpec::gf3(), 9, 4, rng);
    write_code(dir.path() / "base.code", c);
    dir.write("r.rec", "base base.code\nshorten 2,5\npuncture 1\npad\n");
    Replay r = replay_file(dir.path() / "r.rec");
    ASSERT_EQ(r.intermediates.size(), 3u);
    LinearCode s = shorten(c, std::vector<size_t>{1, 4});
    EXPECT_TRUE(same_code(r.intermediates[0], s));
    LinearCode p = puncture(s, std::vector<size_t>{0});
    EXPECT_TRUE(same_code(r.intermediates[1], p));
    EXPECT_TRUE(same_code(r.result(), pad_zero_column(p)));
}

TEST(Replay, step_errors) {
    TempDir dir;
    write_code(dir.path() / "base.code", read_code(kCorpus / "b_13_7_4.code"));
    dir.write("wrong_length.rec", "base base.code\nextend-m1 1001\n");
    EXPECT_THROW(replay_file(dir.path() / "wrong_length.rec"), UsageError);
    // Not orthogonal to the code.
    dir.write("not_dual.rec", "base base.code\nextend-m1 1000000000000\n");
    EXPECT_THROW(replay_file(dir.path() / "not_dual.rec"), NotInDualError);
    dir.write("no_file.rec", "base nothing.code\n");
    EXPECT_THROW(replay_file(dir.path() / "no_file.rec"), Error);
    dir.write("a.rec", "base b.rec\n");
    dir.write("b.rec", "base a.rec\n");
    EXPECT_THROW(replay_file(dir.path() / "a.rec"), ParseError);
}

}  // namespace
}  // namespace lcdkit
