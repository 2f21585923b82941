#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace k3atlas {

// x / 0 in an exact field (Rational or QuadRat).
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// QuadRat operands from different quadratic fields.
class MixedRadicand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rational map evaluated where one of its denominators vanishes.
// `factors` names every denominator factor found to be zero.
class MapDomainError : public std::domain_error {
 public:
  MapDomainError(std::string map, std::vector<std::string> factors);

  const std::string &map() const noexcept { return map_; }
  const std::vector<std::string> &factors() const noexcept { return factors_; }
  bool involves(const std::string &factor) const;

 private:
  std::string map_;
  std::vector<std::string> factors_;
};

// Violated operation precondition (e.g. singularity test off the curve).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace k3atlas
