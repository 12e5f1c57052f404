#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace actdim {

/// Precondition or domain failures raised by the library.
enum class ErrorKind {
    EmptyComplex,
    NotASimplex,
    VertexClash,
    TooLarge,
    NotIrreducible,
    NotFinite,
    CapExceeded,
    EmptySubset,
    DimensionOutOfRange,
    NotPrime,
    NotConnected,
    NotFullSubcomplex,
    NotSpherical,
    NotRightAngled,
    NotApplicable,
    BudgetExhausted,
    InvalidArgument,
    Overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed text input; carries the 1-based line number (0 when not line specific).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace actdim
