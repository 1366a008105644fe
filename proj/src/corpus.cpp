#include "tweetinfo/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "tweetinfo/error.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

bool is_terminator(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

}  // namespace

std::string_view label_name(Label l) {
    return l == Label::Informative ? "INFORMATIVE" : "UNINFORMATIVE";
}

std::optional<Label> parse_label(std::string_view s) {
    std::string upper;
    upper.reserve(s.size());
    for (char c : s) {
        upper.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 0x20) : c);
    }
    if (upper == "INFORMATIVE") return Label::Informative;
    if (upper == "UNINFORMATIVE") return Label::Uninformative;
    return std::nullopt;
}

std::vector<std::string> Dataset::ids() const {
    std::vector<std::string> out;
    out.reserve(examples.size());
    for (const auto& e : examples) out.push_back(e.id);
    return out;
}

Dataset load_dataset(const std::filesystem::path& path, bool has_labels) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset file: " + path.string());

    Dataset data;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto fields = split_tabs(line);
        if (has_labels ? fields.size() != 3 : (fields.size() < 2 || fields.size() > 3)) {
            throw ParseError(path.string(), line_no,
                             "expected " + std::string(has_labels ? "3" : "2 or 3") +
                                 " tab-separated fields, got " + std::to_string(fields.size()));
        }

        Example ex;
        ex.id = std::string(fields[0]);
        ex.text = std::string(fields[1]);
        if (ex.id.empty()) throw ParseError(path.string(), line_no, "empty id");
        if (!seen.insert(ex.id).second) {
            throw ParseError(path.string(), line_no, "duplicate id '" + ex.id + "'");
        }
        if (has_labels) {
            const auto label = parse_label(fields[2]);
            if (!label) {
                throw ParseError(path.string(), line_no,
                                 "unknown label '" + std::string(fields[2]) + "'");
            }
            ex.gold = *label;
        }
        data.examples.push_back(std::move(ex));
    }
    return data;
}

std::vector<Token> tokenize(std::string_view text) {
    const CodePoints pts(text);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < pts.size()) {
        const char32_t cp = pts.at(i);
        if (is_space(cp)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if ((cp == '#' || cp == '@') && i + 1 < pts.size() && is_word_char(pts.at(i + 1))) {
            i += 2;
            while (i < pts.size() && is_word_char(pts.at(i))) ++i;
        } else if (is_word_char(cp)) {
            ++i;
            while (i < pts.size() && is_word_char(pts.at(i))) ++i;
        } else {
            ++i;
        }
        Token tok;
        tok.start = start;
        tok.end = i;
        tok.surface = std::string(pts.slice(start, i));
        tok.normalized = lower_copy(tok.surface);
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
    const CodePoints pts(text);
    std::vector<SentenceSpan> spans;

    const auto flush = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_space(pts.at(begin))) ++begin;
        while (end > begin && is_space(pts.at(end - 1))) --end;
        if (begin < end) spans.push_back({begin, end});
    };

    std::size_t seg_start = 0;
    std::size_t i = 0;
    while (i < pts.size()) {
        const char32_t cp = pts.at(i);
        if (cp == '\n') {
            flush(seg_start, i);
            ++i;
            seg_start = i;
        } else if (is_terminator(cp)) {
            std::size_t j = i;
            while (j < pts.size() && is_terminator(pts.at(j))) ++j;
            flush(seg_start, j);
            seg_start = j;
            i = j;
        } else {
            ++i;
        }
    }
    flush(seg_start, pts.size());
    return spans;
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, Label>>& preds) {
    std::unordered_set<std::string> seen;
    for (const auto& [id, label] : preds) {
        (void)label;
        if (!seen.insert(id).second) {
            throw std::invalid_argument("duplicate prediction id '" + id + "'");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write predictions file: " + path.string());
    for (const auto& [id, label] : preds) {
        out << id << '\t' << label_name(label) << '\n';
    }
    if (!out) throw IoError("error writing predictions file: " + path.string());
}

}  // namespace tweetinfo
