#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dblcat {

enum class ErrorKind {
    NotComposable,
    MissingEntry,
    MalformedGrid,
    BoundaryMismatch,
    BoundaryNotFactorable,
    AmbiguousFactorization,
    MismatchedVertical,
    IncompatibleData,
    ShapeMismatch,
    Mismatch,
    MissingInverse,
    UnknownFixture,
    UnknownId,
    Structure,
    ParseError,
    UnknownKind,
    DanglingId,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is
/// stable and is what callers (and the CLI) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dblcat
