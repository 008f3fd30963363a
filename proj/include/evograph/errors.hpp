#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evograph {

// Malformed external input (graph6 text, parameter strings, CLI specs).
// Carries the byte offset of the first offending character where known.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit parse_error(const std::string& what) : std::runtime_error(what), offset_(0) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Request exceeds a configured exhaustive-search cap (state tables, subset
// enumeration, dependency-radius scans).
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evograph
