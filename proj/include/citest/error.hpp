#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citest {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NegativeCitation : public Error {
public:
    explicit NegativeCitation(std::size_t index)
        : Error("negative citation count at index " + std::to_string(index)), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class RankOutOfRange : public Error {
public:
    using Error::Error;
};

class EmptyCore : public Error {
public:
    EmptyCore() : Error("h-index is 0; core-dependent indices are undefined") {}
};

class DegenerateCore : public Error {
public:
    using Error::Error;
};

class IndexUnderflow : public Error {
public:
    using Error::Error;
};

// Thrown when a prefix-only profile does not reach far enough into the tail.
class InsufficientTail : public Error {
public:
    InsufficientTail(std::size_t known, std::size_t required)
        : Error("prefix of " + std::to_string(known) + " ranks is too short; at least " +
                std::to_string(required) + " ranks are required"),
          known_(known), required_(required) {}
    std::size_t known() const noexcept { return known_; }
    std::size_t required() const noexcept { return required_; }

private:
    std::size_t known_;
    std::size_t required_;
};

class WrongCase : public Error {
public:
    using Error::Error;
};

class GroundTruthUnavailable : public Error {
public:
    GroundTruthUnavailable() : Error("true citation total unknown for a prefix-only profile") {}
};

class ResourceLimit : public Error {
public:
    ResourceLimit(long long n, long long ceiling)
        : Error("n = " + std::to_string(n) + " exceeds the configured ceiling " + std::to_string(ceiling)) {}
};

class NegativeArgument : public Error {
public:
    using Error::Error;
};

}  // namespace citest
