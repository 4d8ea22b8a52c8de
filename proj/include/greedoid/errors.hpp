// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDOID_ERRORS_HPP_
#define GREEDOID_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

#include "greedoid/subset.hpp"

namespace greedoid {

enum class Errc {
  kAxiomViolation,
  kSizeLimit,
  kBadParams,
  kNotFeasible,
  kNoWitness,
  kContractNotFeasible,
  kNotInterval,
  kNotSubfeasible,
  kNotLocalPoset,
  kNotLocalForest,
  kNotAPath,
  kObjectiveUndefined,
  kNotAViolation,
  kNegativeWeight,
  kDisconnected,
  kParseError,
  kValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// An explicit family failed one of the greedoid axioms; carries the pair that
// cannot be augmented (X = Y = 0 encodes a missing empty set).
class AxiomViolationError : public Error {
 public:
  AxiomViolationError(Mask x, Mask y, std::string message)
      : Error(Errc::kAxiomViolation, std::move(message)), x_(x), y_(y) {}
  Mask x() const { return x_; }
  Mask y() const { return y_; }

 private:
  Mask x_;
  Mask y_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace greedoid

#endif  // GREEDOID_ERRORS_HPP_
