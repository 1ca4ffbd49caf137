#pragma once

#include <stdexcept>
#include <string>

namespace mpsa {

// Invalid arguments or configuration supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed external data: CSV files, PGM images, model documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: non-convergence, degenerate spectra, non-finite values.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mpsa
