#ifndef TWEETINFO_LEXICON_HPP
#define TWEETINFO_LEXICON_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tweetinfo/corpus.hpp"

namespace tweetinfo {

/// Semantic/syntactic word class (N, ADJ, NUMord, Ncorona, ...).
/// Names are case-sensitive and drawn from [A-Za-z0-9_].
struct WordClass {
    std::string name;

    bool operator==(const WordClass&) const = default;
    auto operator<=>(const WordClass&) const = default;
};

bool valid_class_name(std::string_view name);

/// One lexicon entry: a normalized (case-folded) token sequence, its word
/// class, an optional label tag, and the open_left flag. An open_left entry
/// drops the leading word-boundary requirement so it can match inside
/// hashtag compounds; the trailing boundary is always kept. open_left is
/// only meaningful (and only allowed) on single-token forms.
struct LexiconEntry {
    std::vector<std::string> form;
    WordClass word_class;
    std::optional<std::string> label;
    bool open_left = false;
};

/// A lexicon entry firing on a token span. Token indices are half-open;
/// char offsets are the code point range covered by those tokens. The entry
/// pointer stays valid as long as the owning Lexicon does.
struct LexMatch {
    const LexiconEntry* entry = nullptr;
    std::size_t token_start = 0;
    std::size_t token_end = 0;
    std::size_t char_start = 0;
    std::size_t char_end = 0;
};

/// Immutable entry collection with a first-token index for matching.
class Lexicon {
public:
    /// Validates entries (non-empty normalized forms, legal class names,
    /// open_left on single tokens only, no duplicate (form, class) pairs)
    /// and builds the index. Throws std::invalid_argument on violations.
    explicit Lexicon(std::vector<LexiconEntry> entries);

    const std::vector<LexiconEntry>& entries() const { return entries_; }

    /// Candidate closed entries whose first form token equals the given
    /// normalized token; the open_left entries are scanned separately.
    const std::vector<std::size_t>* closed_candidates(const std::string& first_token) const;
    const std::vector<std::size_t>& open_entries() const { return open_entries_; }

private:
    std::vector<LexiconEntry> entries_;
    std::unordered_map<std::string, std::vector<std::size_t>> closed_by_first_;
    std::vector<std::size_t> open_entries_;
};

/// Parses a lexicon file. Each non-comment line is
///   form<TAB>class[<TAB>label][<TAB>flags]
/// where multi-word forms use spaces inside the form field, the label field
/// may be empty, and flags is a comma-separated subset of {open_left}.
/// Lines whose first non-whitespace character is '#' are comments; blank
/// lines are ignored. The form field is tokenized and case-folded with the
/// corpus tokenizer, so forms like "covid-19" become token sequences.
Lexicon parse_lexicon(const std::filesystem::path& path);

/// All entry matches over one text's tokens, including overlapping ones.
/// A closed entry matches k consecutive tokens whose normalized surfaces
/// equal its form tokens; an open_left entry matches a single token whose
/// normalized surface ends with its form token. Results are sorted by
/// (token_start, token_end, class name, entry order).
std::vector<LexMatch> tag(const Lexicon& lexicon, const std::vector<Token>& tokens);

}  // namespace tweetinfo

#endif
