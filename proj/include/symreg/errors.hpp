#pragma once

#include <stdexcept>
#include <string>

namespace symreg {

// Bad search-space or algorithm configuration (empty space, unary slots
// with no unary functions, mismatched modes, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data: CSV ingestion problems, schema mismatches between
// an expression and a dataset, vector length mismatches.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Equation text that does not parse. Carries the byte offset of the
// first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Attempt to merge result stores built over different search spaces.
class MergeError : public std::runtime_error {
public:
    explicit MergeError(const std::string& what) : std::runtime_error(what) {}
};

// Benchmark problem generation exhausted its rejection budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// A result-store file that cannot be read back (bad magic, bad version,
// truncated or unparsable records).
class StoreError : public std::runtime_error {
public:
    explicit StoreError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symreg
