#pragma once

#include <stdexcept>
#include <string>

namespace borelscale {

/// A term of an exponential sum grew past the representable range.
class MagnitudeOverflow : public std::runtime_error {
public:
  explicit MagnitudeOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested too close to a pole of the Borel transform.
class PoleProximity : public std::runtime_error {
public:
  explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

/// A norm or moment integral was detected to diverge ("norm divergent",
/// "tail divergent", "integral divergent").
class DivergentIntegral : public std::runtime_error {
public:
  explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};

/// A query that requires an exterior point was made with a point of D̄.
class NotExterior : public std::domain_error {
public:
  explicit NotExterior(const std::string& what) : std::domain_error(what) {}
};

/// A monotone root bracket guaranteed by theory failed numerically.
class BracketViolation : public std::runtime_error {
public:
  explicit BracketViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace borelscale
