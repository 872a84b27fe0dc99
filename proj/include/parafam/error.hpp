#pragma once

#include <stdexcept>
#include <string>

namespace parafam {

/// A violated mathematical precondition: unsupported type, improper subset,
/// invalid residue size, failed certificate, and so on.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (missing fields, wrong JSON types).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parafam
