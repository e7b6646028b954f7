#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridbench {

// Base for every domain failure the library reports. The CLI maps these to
// exit code 1; anything else escaping is an internal failure.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidCellError : public Error {
public:
  using Error::Error;
};

class AdjacencyError : public Error {
public:
  using Error::Error;
};

class GridFormatError : public Error {
public:
  using Error::Error;
};

class InvalidGridError : public Error {
public:
  using Error::Error;
};

// The start cannot reach the goal. Distinct from InternalSearchError so
// callers can tell an unsolvable instance from a solver defect.
class NoPathError : public Error {
public:
  using Error::Error;
};

class InternalSearchError : public Error {
public:
  using Error::Error;
};

class GenerationError : public Error {
public:
  using Error::Error;
};

class InvalidSpecError : public Error {
public:
  using Error::Error;
};

class MeasurementError : public Error {
public:
  using Error::Error;
};

class InvalidPriorityError : public Error {
public:
  using Error::Error;
};

class InvalidConfigError : public Error {
public:
  using Error::Error;
};

class ConfigParseError : public Error {
public:
  ConfigParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace gridbench
