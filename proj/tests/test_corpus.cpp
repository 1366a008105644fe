#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "temp_files.hpp"
#include "tweetinfo/corpus.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/learned.hpp"
#include "tweetinfo/text.hpp"

using namespace tweetinfo;
using tweetinfo::testing::TempFile;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& t : tokens) out.push_back(t.surface);
    return out;
}

}  // namespace

TEST_CASE("load_dataset parses labeled lines") {
    const TempFile file("17\tFirst case confirmed.\tINFORMATIVE\n"
                        "18\tgood morning\tUNINFORMATIVE\n");
    const Dataset data = load_dataset(file.path(), true);
    REQUIRE(data.examples.size() == 2);
    CHECK(data.examples[0].id == "17");
    CHECK(data.examples[0].text == "First case confirmed.");
    CHECK(data.examples[0].gold == Label::Informative);
    CHECK(data.examples[1].id == "18");
    CHECK(data.examples[1].gold == Label::Uninformative);
}

TEST_CASE("load_dataset accepts lowercase labels and skips blank lines") {
    const TempFile file("1\ta\tinformative\n\n2\tb\tUninformative\n");
    const Dataset data = load_dataset(file.path(), true);
    REQUIRE(data.examples.size() == 2);
    CHECK(data.examples[0].gold == Label::Informative);
    CHECK(data.examples[1].gold == Label::Uninformative);
}

TEST_CASE("load_dataset rejects duplicate ids") {
    const TempFile file("17\ta\tINFORMATIVE\n17\tb\tINFORMATIVE\n");
    CHECK_THROWS_AS(load_dataset(file.path(), true), ParseError);
}

TEST_CASE("load_dataset rejects bad field counts and labels") {
    const TempFile one_field("17\n");
    CHECK_THROWS_AS(load_dataset(one_field.path(), true), ParseError);

    const TempFile missing_label("17\ttext\n");
    CHECK_THROWS_AS(load_dataset(missing_label.path(), true), ParseError);

    const TempFile bad_label("17\ttext\tMAYBE\n");
    CHECK_THROWS_AS(load_dataset(bad_label.path(), true), ParseError);

    const TempFile too_many("17\ta\tb\tc\n");
    CHECK_THROWS_AS(load_dataset(too_many.path(), false), ParseError);
}

TEST_CASE("load_dataset without labels tolerates a label column") {
    const TempFile file("17\ttext only\n18\ttext\tINFORMATIVE\n");
    const Dataset data = load_dataset(file.path(), false);
    REQUIRE(data.examples.size() == 2);
    CHECK_FALSE(data.examples[0].gold.has_value());
    CHECK_FALSE(data.examples[1].gold.has_value());
}

TEST_CASE("load_dataset reports missing file") {
    CHECK_THROWS_AS(load_dataset("/nonexistent/nowhere.tsv", true), IoError);
}

TEST_CASE("tokenize keeps hashtags and mentions glued") {
    CHECK(surfaces(tokenize("New #covid19 cases!")) ==
          std::vector<std::string>{"New", "#covid19", "cases", "!"});
    CHECK(surfaces(tokenize("@who says hi")) == std::vector<std::string>{"@who", "says", "hi"});
}

TEST_CASE("tokenize on empty and punctuation-separated input") {
    CHECK(tokenize("").empty());
    CHECK(surfaces(tokenize("first-case")) == std::vector<std::string>{"first", "-", "case"});
}

TEST_CASE("tokenize treats a bare marker as punctuation") {
    CHECK(surfaces(tokenize("# tag")) == std::vector<std::string>{"#", "tag"});
    CHECK(surfaces(tokenize("##tag")) == std::vector<std::string>{"#", "#tag"});
}

TEST_CASE("token offsets are code point based and normalized is lowercased") {
    const auto tokens = tokenize("Caf\xC3\xA9 #Covid19");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].surface == "Caf\xC3\xA9");
    CHECK(tokens[0].normalized == "caf\xC3\xA9");
    CHECK(tokens[0].start == 0);
    CHECK(tokens[0].end == 4);
    CHECK(tokens[1].surface == "#Covid19");
    CHECK(tokens[1].normalized == "#covid19");
    CHECK(tokens[1].start == 5);
    CHECK(tokens[1].end == 13);
}

TEST_CASE("split_sentences on the documented examples") {
    CHECK(split_sentences("Good morning. First case confirmed.").size() == 2);
    const auto one = split_sentences("stay safe");
    REQUIRE(one.size() == 1);
    CHECK(one[0].start == 0);
    CHECK(one[0].end == 9);

    const auto wow = split_sentences("Wow!!! 3 new cases");
    REQUIRE(wow.size() == 2);
    CHECK(slice_codepoints("Wow!!! 3 new cases", wow[0].start, wow[0].end) == "Wow!!!");
    CHECK(slice_codepoints("Wow!!! 3 new cases", wow[1].start, wow[1].end) == "3 new cases");
}

TEST_CASE("split_sentences breaks at newlines and drops blank segments") {
    const auto spans = split_sentences("first line\n\nsecond line");
    REQUIRE(spans.size() == 2);
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   \n  ").empty());
    CHECK(split_sentences("...").size() == 1);
}

TEST_CASE("write_predictions formats and rejects duplicates") {
    const TempFile out("", "preds");
    write_predictions(out.path(), {{"17", Label::Informative}});
    CHECK(tweetinfo::testing::read_file(out.path()) == "17\tINFORMATIVE\n");

    write_predictions(out.path(), {});
    CHECK(tweetinfo::testing::read_file(out.path()).empty());

    CHECK_THROWS_AS(
        write_predictions(out.path(), {{"1", Label::Informative}, {"1", Label::Uninformative}}),
        std::invalid_argument);
}

TEST_CASE("write then load round-trips predictions") {
    const TempFile out("", "roundtrip");
    const std::vector<std::pair<std::string, Label>> preds = {
        {"a", Label::Informative}, {"b", Label::Uninformative}, {"c", Label::Informative}};
    write_predictions(out.path(), preds);
    const PredictionSet loaded = load_predictions(out.path(), {"a", "b", "c"});
    for (const auto& [id, label] : preds) {
        CHECK(loaded.by_id.at(id).label == label);
        CHECK_FALSE(loaded.by_id.at(id).score.has_value());
    }
}

TEST_CASE("dataset label round-trip through prediction files") {
    const TempFile file("1\tx\tINFORMATIVE\n2\ty\tUNINFORMATIVE\n3\tz\tINFORMATIVE\n");
    const Dataset data = load_dataset(file.path(), true);
    std::vector<std::pair<std::string, Label>> preds;
    for (const Example& ex : data.examples) preds.emplace_back(ex.id, *ex.gold);

    const TempFile out("", "labels");
    write_predictions(out.path(), preds);
    const PredictionSet loaded = load_predictions(out.path(), data.ids());
    for (const Example& ex : data.examples) {
        CHECK(loaded.by_id.at(ex.id).label == *ex.gold);
    }
}

namespace {

// Random text over word chars, markers, punctuation, and whitespace.
std::string random_text(std::mt19937& gen) {
    static const char* pieces[] = {"a",  "bc", "def", "x9", "_u", "#",  "@", "!",
                                   "?",  ".",  ",",   "-",  " ",  "  ", "\n", "\t",
                                   "Z",  "Q1", "#tag", "@m", "\xC3\xA9"};
    std::string text;
    const std::size_t n = gen() % 12;
    for (std::size_t i = 0; i < n; ++i) {
        text += pieces[gen() % (sizeof(pieces) / sizeof(pieces[0]))];
    }
    return text;
}

}  // namespace

TEST_CASE("property: tokens partition non-whitespace and reconstruct the text") {
    std::mt19937 gen(20231);
    for (int iter = 0; iter < 300; ++iter) {
        const std::string text = random_text(gen);
        const CodePoints pts(text);
        const auto tokens = tokenize(text);

        std::size_t cursor = 0;
        std::string rebuilt;
        for (const Token& tok : tokens) {
            REQUIRE(tok.start < tok.end);
            REQUIRE(tok.start >= cursor);
            // Gaps between tokens are whitespace only.
            for (std::size_t i = cursor; i < tok.start; ++i) {
                REQUIRE(is_space(pts.at(i)));
                append_utf8(rebuilt, pts.at(i));
            }
            rebuilt += tok.surface;
            cursor = tok.end;
        }
        for (std::size_t i = cursor; i < pts.size(); ++i) {
            REQUIRE(is_space(pts.at(i)));
            append_utf8(rebuilt, pts.at(i));
        }
        REQUIRE(rebuilt == text);

        // Deterministic re-run.
        const auto again = tokenize(text);
        REQUIRE(again.size() == tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            CHECK(again[i].surface == tokens[i].surface);
            CHECK(again[i].start == tokens[i].start);
        }
    }
}

TEST_CASE("property: every token sits inside exactly one sentence span") {
    std::mt19937 gen(977);
    for (int iter = 0; iter < 300; ++iter) {
        const std::string text = random_text(gen);
        const auto tokens = tokenize(text);
        const auto spans = split_sentences(text);

        // Spans are disjoint and ordered.
        for (std::size_t s = 1; s < spans.size(); ++s) {
            REQUIRE(spans[s - 1].end <= spans[s].start);
        }
        for (const Token& tok : tokens) {
            int covering = 0;
            for (const SentenceSpan& span : spans) {
                if (tok.start >= span.start && tok.end <= span.end) ++covering;
            }
            REQUIRE(covering == 1);
        }
    }
}
