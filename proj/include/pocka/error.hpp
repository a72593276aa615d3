#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pocka {

// Malformed input or a request that makes no sense for the given universe.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bounded computation would exceed the configured node guard or iteration cap.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public UsageError {
public:
    ParseError(const std::string& msg, SourceSpan span)
        : UsageError(msg + " at offset " + std::to_string(span.start)), span_(span) {}
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

} // namespace pocka
