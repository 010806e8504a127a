#pragma once

#include <stdexcept>
#include <string>

namespace lki {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text input could not be parsed; carries 1-based line/column.
struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

/// A Morse word failed arity/orientation/component validation.
struct ValidationError : Error {
  using Error::Error;
};

/// A tilde morphism failed to invert: the R-matrix is not rigid here.
struct NotRigidError : Error {
  using Error::Error;
};

/// Evaluation was asked to process a non-normal diagram.
struct NotNormalError : Error {
  using Error::Error;
};

/// A Reidemeister move pattern did not match at the given location.
struct PatternMismatchError : Error {
  using Error::Error;
};

/// A configured step/size cap was exceeded.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace lki
