#pragma once

#include <stdexcept>
#include <string>

namespace xlmatch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// An argument is outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A text input (dictionary TSV, ground truth TSV, match file) is malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Evaluation inputs disagree with each other, e.g. a matched attribute that
// has no frequency in the infobox set.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace xlmatch
