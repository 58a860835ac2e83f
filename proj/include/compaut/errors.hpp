#pragma once

#include <stdexcept>
#include <string>

namespace compaut {

/// Malformed or out-of-contract input (bad file, invalid vertex id, wrong partition).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input outside the domain of an operation (e.g. not a comparability graph).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force oracle was asked to work beyond its configured bound.
class OracleBoundError : public std::runtime_error {
 public:
  OracleBoundError(const std::string& what_bound, long long bound, long long requested)
      : std::runtime_error("oracle bound exceeded: " + what_bound + " limit is " +
                           std::to_string(bound) + ", requested " + std::to_string(requested)),
        bound_(bound) {}

  long long bound() const noexcept { return bound_; }

 private:
  long long bound_;
};

}  // namespace compaut
