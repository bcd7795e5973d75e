#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eudrec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented invariant. `subject` names the offending
/// element (an item id, a field, a username) when there is one.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message, std::string subject = {})
      : Error(message), subject_(std::move(subject)) {}
  const std::string& subject() const noexcept { return subject_; }

 private:
  std::string subject_;
};

class NotFoundError : public Error {
 public:
  NotFoundError(const std::string& message, std::string key)
      : Error(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// A similarity measure is not defined for the given vectors (zero vector,
/// zero variance, too few shared coordinates).
class UndefinedSimilarityError : public Error {
 public:
  using Error::Error;
};

/// A definition or configuration document failed to load. The message
/// carries the location (file and JSON path or line).
class LoadError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant broken; signals a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A required published artifact (the rule table) is not available yet.
class UnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace eudrec
