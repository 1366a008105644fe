#include "tweetinfo/rules.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tweetinfo/error.hpp"

namespace tweetinfo {

namespace {

constexpr std::size_t kMinRuleLen = 2;
constexpr std::size_t kMaxRuleLen = 7;

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> parts;
    std::istringstream in(line);
    std::string part;
    while (in >> part) parts.push_back(part);
    return parts;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#';
    }
    return true;
}

std::string rule_key(const RulePattern& r) {
    std::string key;
    for (const auto& c : r.elements) {
        key += c.name;
        key.push_back(' ');
    }
    key += std::to_string(r.head);
    if (r.label_override) {
        key.push_back('>');
        key += *r.label_override;
    }
    return key;
}

}  // namespace

RuleSet parse_rules(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rule file: " + path.string());

    RuleSet ruleset;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;

        auto parts = split_ws(line);

        RulePattern rule;
        const auto arrow = std::find(parts.begin(), parts.end(), "->");
        if (arrow != parts.end()) {
            if (std::distance(arrow, parts.end()) != 2) {
                throw ParseError(path.string(), line_no,
                                 "expected exactly one label after '->'");
            }
            rule.label_override = parts.back();
            parts.erase(arrow, parts.end());
        }

        std::size_t stars = 0;
        for (std::string& part : parts) {
            bool is_head = false;
            if (part.starts_with('*')) {
                is_head = true;
                ++stars;
                part.erase(0, 1);
            }
            if (!valid_class_name(part)) {
                throw ParseError(path.string(), line_no, "invalid class name '" + part + "'");
            }
            if (is_head) rule.head = rule.elements.size();
            rule.elements.push_back(WordClass{std::move(part)});
        }
        if (stars != 1) {
            throw ParseError(path.string(), line_no,
                             "expected exactly one '*' head marker, found " +
                                 std::to_string(stars));
        }
        if (rule.elements.size() < kMinRuleLen || rule.elements.size() > kMaxRuleLen) {
            throw ParseError(path.string(), line_no,
                             "rule length must be between 2 and 7, got " +
                                 std::to_string(rule.elements.size()));
        }
        if (!seen.insert(rule_key(rule)).second) {
            throw ParseError(path.string(), line_no, "duplicate rule");
        }
        ruleset.rules.push_back(std::move(rule));
    }
    return ruleset;
}

std::vector<SpanMatch> match_rules(const RuleSet& ruleset, const std::vector<Token>& tokens,
                                   const std::vector<LexMatch>& matches) {
    // Lexicon matches grouped by their start token.
    std::vector<std::vector<const LexMatch*>> by_start(tokens.size() + 1);
    for (const LexMatch& m : matches) by_start[m.token_start].push_back(&m);

    std::vector<SpanMatch> fired;
    std::vector<const LexMatch*> chain;

    const auto record = [&](std::size_t rule_idx) {
        const RulePattern& rule = ruleset.rules[rule_idx];
        SpanMatch span;
        span.rule = rule_idx;
        span.char_start = chain.front()->char_start;
        span.char_end = chain.back()->char_end;
        span.token_start = chain.front()->token_start;
        span.token_end = chain.back()->token_end;
        span.label = rule.label_override ? rule.label_override : chain[rule.head]->entry->label;
        fired.push_back(std::move(span));
    };

    for (std::size_t r = 0; r < ruleset.rules.size(); ++r) {
        const RulePattern& rule = ruleset.rules[r];
        // Depth-first extension over strictly adjacent matches.
        const auto extend = [&](const auto& self, std::size_t pos, std::size_t elem) -> void {
            if (elem == rule.elements.size()) {
                record(r);
                return;
            }
            if (pos >= by_start.size()) return;
            for (const LexMatch* m : by_start[pos]) {
                if (m->entry->word_class == rule.elements[elem]) {
                    chain.push_back(m);
                    self(self, m->token_end, elem + 1);
                    chain.pop_back();
                }
            }
        };
        for (std::size_t p = 0; p < tokens.size(); ++p) extend(extend, p, 0);
    }

    // Deduplicate by (char_start, char_end, label), first firing wins, then
    // order by span position.
    std::set<std::tuple<std::size_t, std::size_t, std::optional<std::string>>> seen;
    std::vector<SpanMatch> result;
    for (SpanMatch& span : fired) {
        if (seen.insert({span.char_start, span.char_end, span.label}).second) {
            result.push_back(std::move(span));
        }
    }
    std::sort(result.begin(), result.end(), [](const SpanMatch& a, const SpanMatch& b) {
        return std::tie(a.char_start, a.char_end, a.label) <
               std::tie(b.char_start, b.char_end, b.label);
    });
    return result;
}

RuleDecision classify_rule_based(const RuleSet& ruleset, const Lexicon& lexicon,
                                 std::string_view text, const RuleClassifierConfig& config) {
    if (config.threshold < 1) {
        throw std::invalid_argument("rule classifier threshold must be >= 1");
    }
    const std::vector<Token> tokens = tokenize(text);
    const std::vector<LexMatch> matches = tag(lexicon, tokens);

    RuleDecision decision;
    decision.spans = match_rules(ruleset, tokens, matches);
    for (const SpanMatch& span : decision.spans) {
        if (span.label && *span.label == config.target_label) ++decision.span_count;
    }
    decision.label = decision.span_count >= config.threshold ? Label::Informative
                                                             : Label::Uninformative;
    return decision;
}

}  // namespace tweetinfo
