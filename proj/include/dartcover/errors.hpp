#pragma once

#include <stdexcept>
#include <string>

namespace dartcover {

/// Base class for all library errors. `kind()` is a short machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("parse", "line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class InvalidGraph : public Error {
public:
    explicit InvalidGraph(const std::string& message) : Error("invalid-graph", message) {}
};

/// The requested target family has no polynomial decider here.
class UnsupportedFamily : public Error {
public:
    explicit UnsupportedFamily(const std::string& message) : Error("unsupported-family", message) {}
};

/// Input lies outside the domain an operation is defined on.
class OutOfScope : public Error {
public:
    explicit OutOfScope(const std::string& message) : Error("out-of-scope", message) {}
};

/// An exact search would exceed the configured budget.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& message) : Error("resource-limit", message) {}
};

}  // namespace dartcover
