#pragma once

#include <stdexcept>
#include <string>

namespace phonofuse {

// Malformed user input: a numeral out of range, a bad override file line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problems with the data the pipeline consumes (lexicon, dataset, reports).
// The CLI maps these to exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : DataError {
  using DataError::DataError;
};

struct InvalidKeyword : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a phoneme symbol is outside the ARPAbet inventory; only
// reachable through a corrupted lexicon.
struct ClassificationError : DataError {
  using DataError::DataError;
};

}  // namespace phonofuse
