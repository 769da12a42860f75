#pragma once

#include <stdexcept>
#include <string>

namespace katofan {

/// Input that violates a mathematical precondition (bad hom, non-face, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or shape mismatch between arguments.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed document: parse error, missing or unknown field, bad version.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace katofan
