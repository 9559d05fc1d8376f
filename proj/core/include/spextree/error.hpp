#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spextree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor or operation parameter lies outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (edge lists, catalog names, graph6). A line of 0 means the
/// problem is not tied to one line (a cycle or a disconnected edge list).
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, int line, int column) {
        if (line <= 0)
            return message;
        std::string where = "line " + std::to_string(line);
        if (column > 0)
            where += ", column " + std::to_string(column);
        return where + ": " + message;
    }

    int line_;
    int column_;
};

/// The input is valid but lies outside the classification domain (stars).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search or enumeration would exceed its configured cap.
class BudgetError : public Error {
public:
    BudgetError(const std::string& cap_name, std::int64_t cap, std::int64_t requested)
        : Error(cap_name + " cap is " + std::to_string(cap) + ", requested " +
                std::to_string(requested)),
          cap_(cap),
          requested_(requested) {}

    std::int64_t cap() const noexcept { return cap_; }
    std::int64_t requested() const noexcept { return requested_; }

private:
    std::int64_t cap_;
    std::int64_t requested_;
};

/// Power iteration hit its iteration cap; carries the last Collatz-Wielandt interval.
class ConvergenceError : public Error {
public:
    ConvergenceError(double lower, double upper, std::int64_t iterations)
        : Error("power iteration did not converge after " + std::to_string(iterations) +
                " iterations; last interval [" + std::to_string(lower) + ", " +
                std::to_string(upper) + "]"),
          lower_(lower),
          upper_(upper) {}

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

}  // namespace spextree
