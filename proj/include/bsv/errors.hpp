#pragma once

#include <stdexcept>
#include <string>

namespace bsv {

/// Malformed input files or serialized values.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A precondition of an operation does not hold (bad class label, wrong
/// prime, degree mismatch, ...).
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Resource guards: conductor limit, element caps, tuple caps.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Character data is mathematically inconsistent (non-integer or negative
/// class multiplication coefficient).
class table_corruption_error : public std::runtime_error {
public:
  explicit table_corruption_error(const std::string& msg) : std::runtime_error(msg) {}
};

class unknown_label_error : public precondition_error {
public:
  explicit unknown_label_error(const std::string& msg) : precondition_error(msg) {}
};

}  // namespace bsv
