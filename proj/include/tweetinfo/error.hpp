#ifndef TWEETINFO_ERROR_HPP
#define TWEETINFO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tweetinfo {

/// File could not be opened or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A line of an input file violates its format. Carries the offending
/// location so CLI diagnostics can point at it.
struct ParseError : std::runtime_error {
    ParseError(std::string file, std::size_t line_no, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line_no) + ": " + message),
          file(std::move(file)),
          line(line_no) {}

    std::string file;
    std::size_t line;
};

/// Well-formed inputs that do not fit together (e.g. a prediction stream
/// missing ids the caller requires).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tweetinfo

#endif
