// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace daqc {

/// Operands of mismatched qubit counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Qubit, site or position index outside its valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed input: non-Hermitian operator, bad parameters, unclassifiable term.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request would exceed a configured resource cap (e.g. dense qubit limit).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The coupling solver could not reach the target profile.
class InfeasibleTargetError : public std::runtime_error {
 public:
  InfeasibleTargetError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace daqc
