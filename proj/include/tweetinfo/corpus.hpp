#ifndef TWEETINFO_CORPUS_HPP
#define TWEETINFO_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tweetinfo {

/// Binary tweet label. Informative is the positive class everywhere.
enum class Label { Informative, Uninformative };

constexpr std::size_t label_index(Label l) { return l == Label::Informative ? 0 : 1; }

/// Canonical file rendering: INFORMATIVE / UNINFORMATIVE.
std::string_view label_name(Label l);

/// Case-insensitive parse of the canonical names; nullopt on anything else.
std::optional<Label> parse_label(std::string_view s);

struct Example {
    std::string id;
    std::string text;  // preserved byte-exactly from input
    std::optional<Label> gold;
};

struct Dataset {
    std::vector<Example> examples;

    std::vector<std::string> ids() const;
};

/// One token of a text. Offsets are code point indices into the text;
/// normalized is the simple-lowercased surface.
struct Token {
    std::string surface;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string normalized;
};

/// Half-open code point range of one sentence, whitespace-trimmed.
struct SentenceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

/// Reads a dataset TSV (UTF-8, LF): id<TAB>text or id<TAB>text<TAB>LABEL.
/// With has_labels, every line must carry a label; without it, a label
/// column is tolerated but ignored. Tabs inside tweet text are not
/// supported. Throws IoError (missing file) or ParseError (bad field
/// count, unknown label, empty or duplicate id) with the line number.
Dataset load_dataset(const std::filesystem::path& path, bool has_labels);

/// Splits a text into tokens: a maximal run of word characters (letters,
/// digits, underscore), optionally with a single '#' or '@' glued to its
/// front, or a single non-whitespace non-word character. Hashtags and
/// mentions therefore survive as one token.
std::vector<Token> tokenize(std::string_view text);

/// Sentence boundaries fall after any run of '.', '!', '?' and at each
/// newline. Spans exclude leading/trailing whitespace; a text with no
/// terminator is one span. This rule is part of the external contract:
/// per-sentence predictions depend on it.
std::vector<SentenceSpan> split_sentences(std::string_view text);

/// Writes one id<TAB>LABEL line per prediction, input order preserved.
/// Throws std::invalid_argument on duplicate ids, IoError if unwritable.
void write_predictions(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, Label>>& preds);

}  // namespace tweetinfo

#endif
