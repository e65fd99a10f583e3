#ifndef DEFLOG_ERRORS_HPP
#define DEFLOG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace deflog {

/// Syntax error in a sentence, theory file or framework file.
/// Line and column are 1-based; line 0 means "not tied to a line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(format(line, column, message)),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& m) {
        if (line == 0) return m;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + m;
    }
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Aggregate of the per-line errors collected while parsing a theory file.
class TheoryParseError : public std::runtime_error {
public:
    explicit TheoryParseError(std::vector<ParseError> errors)
        : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

    const std::vector<ParseError>& errors() const { return errors_; }

private:
    static std::string join(const std::vector<ParseError>& errors) {
        std::string out;
        for (const auto& e : errors) {
            if (!out.empty()) out += '\n';
            out += e.what();
        }
        return out;
    }
    std::vector<ParseError> errors_;
};

/// Raised when a theory exceeds the configured search cap.
class TheoryTooLargeError : public std::runtime_error {
public:
    TheoryTooLargeError(std::size_t size, std::size_t cap)
        : std::runtime_error("theory too large: " + std::to_string(size) +
                             " sentences exceeds the cap of " + std::to_string(cap)) {}
};

/// Raised when an operation's precondition is violated by the caller.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& message) : std::logic_error(message) {}
};

} // namespace deflog

#endif
