#ifndef TWEETINFO_RULES_HPP
#define TWEETINFO_RULES_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tweetinfo/corpus.hpp"
#include "tweetinfo/lexicon.hpp"

namespace tweetinfo {

/// A rule: an ordered word-class sequence (length 2-7) with one head
/// position. A fired span inherits the lexicon label of the entry matched
/// at the head, unless label_override is set.
struct RulePattern {
    std::vector<WordClass> elements;
    std::size_t head = 0;
    std::optional<std::string> label_override;

    bool operator==(const RulePattern&) const = default;
};

struct RuleSet {
    std::vector<RulePattern> rules;
};

/// A rule firing over adjacent lexicon matches. rule indexes into the
/// RuleSet that produced the match (after deduplication, the first rule
/// that produced the span).
struct SpanMatch {
    std::size_t rule = 0;
    std::size_t char_start = 0;
    std::size_t char_end = 0;
    std::size_t token_start = 0;
    std::size_t token_end = 0;
    std::optional<std::string> label;
};

struct RuleClassifierConfig {
    int threshold = 1;  // minimum informative span count, >= 1
    std::string target_label = "informative";
};

/// Parses a rule file: one rule per line, space-separated class names with
/// exactly one prefixed '*' (the head), optionally followed by "-> label"
/// to override label inheritance. '#' comments and blank lines are
/// ignored. Throws ParseError on zero or multiple '*' markers, length
/// outside 2-7, bad class names, unknown trailing syntax, duplicate rules.
RuleSet parse_rules(const std::filesystem::path& path);

/// Fires every rule everywhere it applies: elements c1..ck match lexicon
/// matches m1..mk of those classes that are strictly adjacent in token
/// indices (m(j+1) starts where mj ends). Results are deduplicated by
/// (char_start, char_end, label) and sorted by (char_start, char_end,
/// label). matches must come from tag() over the same tokens.
std::vector<SpanMatch> match_rules(const RuleSet& ruleset, const std::vector<Token>& tokens,
                                   const std::vector<LexMatch>& matches);

struct RuleDecision {
    Label label = Label::Uninformative;
    int span_count = 0;  // deduplicated spans carrying the target label
    std::vector<SpanMatch> spans;
};

/// Tags, fires rules, and thresholds: Informative iff at least
/// config.threshold deduplicated spans carry config.target_label. A text
/// where no rule fires is Uninformative by default.
RuleDecision classify_rule_based(const RuleSet& ruleset, const Lexicon& lexicon,
                                 std::string_view text, const RuleClassifierConfig& config);

}  // namespace tweetinfo

#endif
