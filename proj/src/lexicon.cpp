#include "tweetinfo/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "tweetinfo/error.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo {

namespace {

std::string form_key(const LexiconEntry& e) {
    std::string key;
    for (const auto& tok : e.form) {
        key += tok;
        key.push_back('\x1F');  // unit separator; cannot occur inside a token
    }
    key += e.word_class.name;
    return key;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) {
            fields.emplace_back(line.substr(pos));
            return fields;
        }
        fields.emplace_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#';
    }
    return true;  // blank
}

}  // namespace

bool valid_class_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const LexiconEntry& e = entries_[i];
        if (e.form.empty()) throw std::invalid_argument("lexicon entry with empty form");
        for (const auto& tok : e.form) {
            if (tok.empty()) throw std::invalid_argument("lexicon entry with empty form token");
            if (tok != lower_copy(tok)) {
                throw std::invalid_argument("lexicon form token not case-folded: '" + tok + "'");
            }
        }
        if (!valid_class_name(e.word_class.name)) {
            throw std::invalid_argument("invalid word class name: '" + e.word_class.name + "'");
        }
        if (e.open_left && e.form.size() != 1) {
            throw std::invalid_argument("open_left requires a single-token form");
        }
        if (!seen.insert(form_key(e)).second) {
            throw std::invalid_argument("duplicate lexicon entry (form, class)");
        }
        if (e.open_left) {
            open_entries_.push_back(i);
        } else {
            closed_by_first_[e.form.front()].push_back(i);
        }
    }
}

const std::vector<std::size_t>* Lexicon::closed_candidates(const std::string& first_token) const {
    const auto it = closed_by_first_.find(first_token);
    return it == closed_by_first_.end() ? nullptr : &it->second;
}

Lexicon parse_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());

    std::vector<LexiconEntry> entries;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;

        const auto fields = split_fields(line);
        if (fields.size() < 2 || fields.size() > 4) {
            throw ParseError(path.string(), line_no,
                             "expected form<TAB>class[<TAB>label][<TAB>flags]");
        }

        LexiconEntry entry;
        for (const Token& tok : tokenize(fields[0])) {
            entry.form.push_back(tok.normalized);
        }
        if (entry.form.empty()) throw ParseError(path.string(), line_no, "empty form field");

        if (!valid_class_name(fields[1])) {
            throw ParseError(path.string(), line_no, "invalid class name '" + fields[1] + "'");
        }
        entry.word_class.name = fields[1];

        if (fields.size() >= 3 && !fields[2].empty()) entry.label = fields[2];

        if (fields.size() == 4 && !fields[3].empty()) {
            std::size_t pos = 0;
            const std::string& flags = fields[3];
            while (pos <= flags.size()) {
                const std::size_t comma = flags.find(',', pos);
                const std::string flag =
                    flags.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (flag == "open_left") {
                    entry.open_left = true;
                } else {
                    throw ParseError(path.string(), line_no, "unknown flag '" + flag + "'");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }

        if (entry.open_left && entry.form.size() != 1) {
            throw ParseError(path.string(), line_no, "open_left requires a single-token form");
        }
        if (!seen.insert(form_key(entry)).second) {
            throw ParseError(path.string(), line_no, "duplicate (form, class) entry");
        }
        entries.push_back(std::move(entry));
    }
    return Lexicon(std::move(entries));
}

std::vector<LexMatch> tag(const Lexicon& lexicon, const std::vector<Token>& tokens) {
    const auto& entries = lexicon.entries();
    std::vector<std::pair<std::size_t, LexMatch>> found;  // (entry index, match)

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (const auto* candidates = lexicon.closed_candidates(tokens[i].normalized)) {
            for (const std::size_t idx : *candidates) {
                const LexiconEntry& entry = entries[idx];
                const std::size_t k = entry.form.size();
                if (i + k > tokens.size()) continue;
                bool all = true;
                for (std::size_t j = 1; j < k; ++j) {
                    if (tokens[i + j].normalized != entry.form[j]) {
                        all = false;
                        break;
                    }
                }
                if (!all) continue;
                found.push_back({idx, LexMatch{&entry, i, i + k, tokens[i].start,
                                               tokens[i + k - 1].end}});
            }
        }
        for (const std::size_t idx : lexicon.open_entries()) {
            const LexiconEntry& entry = entries[idx];
            if (tokens[i].normalized.ends_with(entry.form.front())) {
                found.push_back({idx, LexMatch{&entry, i, i + 1, tokens[i].start, tokens[i].end}});
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        const LexMatch& ma = a.second;
        const LexMatch& mb = b.second;
        if (ma.token_start != mb.token_start) return ma.token_start < mb.token_start;
        if (ma.token_end != mb.token_end) return ma.token_end < mb.token_end;
        if (ma.entry->word_class != mb.entry->word_class) {
            return ma.entry->word_class < mb.entry->word_class;
        }
        return a.first < b.first;
    });

    std::vector<LexMatch> matches;
    matches.reserve(found.size());
    for (auto& [idx, m] : found) matches.push_back(m);
    return matches;
}

}  // namespace tweetinfo
