#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anon {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedLanguage : public Error {
public:
    explicit UnsupportedLanguage(const std::string& name)
        : Error("unsupported language: " + name) {}
};

/// Raised by the lexer; `offset` is the byte offset where the offending
/// construct starts.
class LexError : public Error {
public:
    LexError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class EncodingError : public LexError {
public:
    explicit EncodingError(std::size_t offset) : LexError("invalid UTF-8", offset) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent corpus input. `line` is 1-based, 0 if unknown.
class DataError : public Error {
public:
    DataError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace anon
