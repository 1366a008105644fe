#ifndef TWEETINFO_TEXT_HPP
#define TWEETINFO_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tweetinfo {

/// Decoded view of a UTF-8 string: code points plus the byte offset where
/// each one starts. All public offsets in this library are code point
/// indices; this class converts between the two views.
///
/// Invalid UTF-8 bytes are consumed one at a time and decoded as U+FFFD so
/// offsets stay well defined for arbitrary input.
class CodePoints {
public:
    explicit CodePoints(std::string_view utf8);

    std::size_t size() const { return points_.size(); }
    char32_t at(std::size_t i) const { return points_[i]; }

    /// Byte offset of code point i; i == size() gives the total byte length.
    std::size_t byte_offset(std::size_t i) const { return offsets_[i]; }

    /// Bytes of the half-open code point range [begin, end).
    std::string_view slice(std::size_t begin, std::size_t end) const {
        return text_.substr(offsets_[begin], offsets_[end] - offsets_[begin]);
    }

private:
    std::string_view text_;
    std::vector<char32_t> points_;
    std::vector<std::size_t> offsets_;  // size() + 1 entries
};

/// Letters, decimal digits, or underscore. Letter and digit coverage is a
/// range table over the major Unicode blocks (Latin incl. extensions, Greek,
/// Cyrillic, Armenian, Hebrew, Arabic, Devanagari, Thai, Georgian, kana,
/// CJK, Hangul, fullwidth forms); unlisted blocks are treated as non-word.
bool is_word_char(char32_t cp);

bool is_space(char32_t cp);

/// Simple (1:1) lowercase mapping for ASCII, Latin-1, Latin Extended-A,
/// Greek, and Cyrillic; identity elsewhere.
char32_t to_lower(char32_t cp);

/// Code-point-wise to_lower over a UTF-8 string.
std::string lower_copy(std::string_view utf8);

void append_utf8(std::string& out, char32_t cp);

/// Bytes of the half-open code point range [begin, end) of a UTF-8 string.
std::string_view slice_codepoints(std::string_view utf8, std::size_t begin, std::size_t end);

}  // namespace tweetinfo

#endif
