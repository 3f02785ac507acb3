#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swalk {

// Raised when exact arithmetic would wrap. Results computed past this point
// cannot be trusted, so callers should let it propagate to the top level.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error("integer overflow: " + what) {}
};

// Raised when a request would exceed the configured memory budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error("resource limit: " + what) {}
};

// Invalid argument combinations (degenerate lines, bad chunk sizes, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Process-wide memory budget in bytes. Large buffers (symbol prefixes,
// walk prefixes, window tables) are checked against it before allocation.
std::size_t memory_budget();
void set_memory_budget(std::size_t bytes);

// Throws ResourceLimitError if `bytes` exceeds the current budget.
void require_budget(std::size_t bytes, const char* what);

}  // namespace swalk
