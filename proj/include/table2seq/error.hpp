// Error types shared across the library. Validation errors cover bad input
// data or arguments (CLI exit code 1); everything else is a runtime fault
// (exit code 2).
#pragma once

#include <stdexcept>
#include <string>

namespace t2s {

// Tensor shape disagreement, e.g. matmul inner dimensions.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Value outside an operation's domain (empty softmax input, non-scalar
// backward root, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed user input: bad JSONL line, count mismatch, empty row.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable or corrupt on-disk artifact (checkpoint, template store).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training aborted (non-finite loss and the like).
struct TrainingError : std::runtime_error {
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace t2s
