#pragma once

#include <stdexcept>
#include <string>

namespace pierik {

/// Base class for all pierik errors. what() is a single line of the form
/// "<kind>: <detail>", suitable for machine parsing.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& d) : Error("parse", d) {}
};

struct MonotonicityError : Error {
    explicit MonotonicityError(const std::string& d) : Error("monotonicity", d) {}
};

struct StrictnessError : Error {
    explicit StrictnessError(const std::string& d) : Error("strictness", d) {}
};

struct OutOfBounds : Error {
    explicit OutOfBounds(const std::string& d) : Error("out-of-bounds", d) {}
};

struct NotContained : Error {
    explicit NotContained(const std::string& d) : Error("not-contained", d) {}
};

struct EmptyShape : Error {
    explicit EmptyShape(const std::string& d) : Error("empty-shape", d) {}
};

struct WrongSpace : Error {
    explicit WrongSpace(const std::string& d) : Error("wrong-space", d) {}
};

struct OutOfRangeP : Error {
    explicit OutOfRangeP(const std::string& d) : Error("p-out-of-range", d) {}
};

struct NegativeContent : Error {
    explicit NegativeContent(const std::string& d) : Error("negative-content", d) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& d) : Error("domain", d) {}
};

}  // namespace pierik
