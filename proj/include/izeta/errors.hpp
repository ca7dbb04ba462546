#pragma once

#include <stdexcept>
#include <string>

namespace izeta {

// Base class for all errors raised by the library. The CLI maps any
// Error to exit code 1; conjecture violations are data, not errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (polynomial text, ideal constraints, schema).
class InputError : public Error {
  public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// Syntax error in polynomial text; carries a 0-based position.
class ParseError : public InputError {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : InputError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Schema violation when ingesting JSON; carries the offending path.
class SchemaError : public InputError {
  public:
    SchemaError(const std::string& what, const std::string& path_)
        : InputError(what + " at " + path_), path(path_) {}
    std::string path;
};

// A blow-up center with non-rational coordinates is required. The message
// names the univariate polynomial whose roots are the missing centers.
class IrrationalCenterError : public Error {
  public:
    IrrationalCenterError(const std::string& what, const std::string& poly_text)
        : Error(what + ": irrational center, vanishing locus " + poly_text),
          minimal_polynomial(poly_text) {}
    std::string minimal_polynomial;
};

// Generic position could not be reached after bounded retries.
class GenericPositionError : public Error {
  public:
    explicit GenericPositionError(long long seed)
        : Error("generic position not reached (seed " + std::to_string(seed) +
                "); try a different --seed") {}
};

// Internal consistency violation: a bug, not a user problem.
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

}  // namespace izeta
