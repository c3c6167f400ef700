#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace severi {

/// Argument outside an operation's domain (wrong surface, D = E, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A census was requested before the smaller classes it reads were evaluated.
class DependencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two evaluation routes disagree, or a quantity that must be integral or
/// nonnegative is not. Carries every route value for the diagnostic dump.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(std::string what, std::vector<std::pair<std::string, std::string>> values = {})
      : std::runtime_error(std::move(what)), values_(std::move(values)) {}

  const std::vector<std::pair<std::string, std::string>>& values() const noexcept { return values_; }

 private:
  std::vector<std::pair<std::string, std::string>> values_;
};

/// Conflicting value for an existing store key.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text (class specs, table rows). `row` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t row = 0)
      : std::runtime_error(row ? "row " + std::to_string(row) + ": " + what : what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Stored table written by another format or engine version.
class MigrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace severi
