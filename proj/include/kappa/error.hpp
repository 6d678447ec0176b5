#ifndef KAPPA_ERROR_HPP
#define KAPPA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kappa {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Thrown by classical_limit when the denominator vanishes at q = 0.
struct NoClassicalLimit : Error {
    explicit NoClassicalLimit(const std::string& offending)
        : Error("no classical limit (pole at q = 0): " + offending), scalar_text(offending) {}
    std::string scalar_text;
};

struct MixedAlgebra : Error {
    explicit MixedAlgebra(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what), line(line), column(column) {}
    int line;
    int column;
};

} // namespace kappa

#endif
