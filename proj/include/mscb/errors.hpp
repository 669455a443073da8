#ifndef MSCB_ERRORS_HPP
#define MSCB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mscb {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The instance does not satisfy the preconditions of the requested solver
/// (wrong graph class, wrong bundle family class, ...).
struct UnsupportedInstanceError : Error {
    using Error::Error;
};

/// A coloring handed in as a witness is partial or improper.
struct InvalidWitnessError : Error {
    using Error::Error;
};

/// A search hit its node limit before proving anything.
struct InconclusiveError : Error {
    using Error::Error;
};

/// Malformed instance text; carries 1-based line and column.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace mscb

#endif
