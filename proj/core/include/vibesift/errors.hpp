#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vibesift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A required column is absent from a CSV header.
class MissingColumnError : public Error {
public:
    explicit MissingColumnError(const std::string& column)
        : Error("missing column: " + column), column_(column) {}
    const std::string& column() const { return column_; }

private:
    std::string column_;
};

/// A CSV record cannot be parsed into a tweet.
class MalformedRowError : public Error {
public:
    MalformedRowError(std::size_t line, const std::string& reason)
        : Error("malformed row at line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Two tweets in one corpus share an id.
class DuplicateIdError : public Error {
public:
    explicit DuplicateIdError(const std::string& id)
        : Error("duplicate tweet id: " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& reason)
        : Error("I/O failure on " + path + ": " + reason) {}
};

/// Corpus has too few tweets to split.
class CorpusTooSmallError : public Error {
public:
    explicit CorpusTooSmallError(std::size_t n)
        : Error("corpus too small to split: " + std::to_string(n) + " tweets"), n_(n) {}
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
};

/// A lexicon or list file line does not parse.
class LexiconParseError : public Error {
public:
    LexiconParseError(std::size_t line, const std::string& reason)
        : Error("lexicon parse error at line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A valence entry lies outside [-4, 4].
class ValenceOutOfRangeError : public Error {
public:
    ValenceOutOfRangeError(const std::string& token, double value)
        : Error("valence out of range for \"" + token + "\": " + std::to_string(value)) {}
};

/// A polarity or subjectivity entry violates its bounds.
class BoundViolationError : public Error {
public:
    explicit BoundViolationError(const std::string& token)
        : Error("polarity/subjectivity bounds violated for \"" + token + "\"") {}
};

/// A sentiment class has zero tweets where at least one is required.
class EmptyClassError : public Error {
public:
    explicit EmptyClassError(const std::string& class_name)
        : Error("sentiment class has no tweets: " + class_name) {}
};

/// Too few usable data points for a correlation.
class TooFewPointsError : public Error {
public:
    explicit TooFewPointsError(std::size_t n)
        : Error("too few points with engagement data: " + std::to_string(n)), n_(n) {}
    std::size_t count() const { return n_; }

private:
    std::size_t n_;
};

/// Bad configuration value, unknown key, or invalid usage.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace vibesift
