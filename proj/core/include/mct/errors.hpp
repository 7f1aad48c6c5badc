#pragma once

#include <stdexcept>
#include <string>

namespace mct {

/// Bad or inconsistent configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem problems: missing files, malformed records, failed writes (exit code 2).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Model endpoint failures, each kind distinguishable (exit code 2).
class ClientError : public std::runtime_error {
 public:
  enum class Kind { Auth, RateLimit, MalformedResponse, Network };

  ClientError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A score or report was requested over zero matching trials (exit code 3).
/// Scores are undefined on empty selections and never reported as 0.
class EmptyResultError : public std::runtime_error {
 public:
  explicit EmptyResultError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mct
