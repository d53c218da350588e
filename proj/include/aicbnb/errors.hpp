#pragma once

#include <stdexcept>
#include <string>

namespace aicbnb {

// Bad flags, bad arguments, out-of-range requests. CLI exit code 1.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Missing files, malformed CSV cells, degenerate data. CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace aicbnb
