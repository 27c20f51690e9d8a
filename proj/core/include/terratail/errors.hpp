// Copyright 2026 The terratail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TERRATAIL_ERRORS_HPP_
#define TERRATAIL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace terratail {

// Invariant violation during construction of a domain type. Carries the
// name of the offending field so callers can report it structurally.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string type_name, std::string field, std::string what)
      : std::invalid_argument(type_name + "." + field + ": " + what),
        type_name_(std::move(type_name)),
        field_(std::move(field)) {}

  const std::string& type_name() const { return type_name_; }
  const std::string& field() const { return field_; }

 private:
  std::string type_name_;
  std::string field_;
};

// Base for model-domain errors (valid inputs, but the model has no answer).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fluidization reduction meets or exceeds the quiescent penetration
// stiffness; the substrate cannot support the oscillating tail.
class SubstrateYield : public ModelError {
 public:
  using ModelError::ModelError;
};

// The force curve never reaches the requested load inside the bracket.
class NoIntersection : public ModelError {
 public:
  using ModelError::ModelError;
};

// Bracketing detected a sign inconsistency in a supposedly monotone curve.
class NonMonotone : public ModelError {
 public:
  using ModelError::ModelError;
};

class DepthOutOfProfile : public ModelError {
 public:
  using ModelError::ModelError;
};

// Idle drag is zero (zero depth or zero width); the ratio is undefined.
class DegenerateDrag : public ModelError {
 public:
  using ModelError::ModelError;
};

// The bracket does not straddle R = 1.
class NoCrossover : public ModelError {
 public:
  using ModelError::ModelError;
};

class InsufficientData : public ModelError {
 public:
  using ModelError::ModelError;
};

class WindowOutOfRange : public ModelError {
 public:
  using ModelError::ModelError;
};

class DegenerateBaseline : public ModelError {
 public:
  using ModelError::ModelError;
};

class InconsistentCalibration : public ModelError {
 public:
  using ModelError::ModelError;
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, long line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + what
                                     : what),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace terratail

#endif  // TERRATAIL_ERRORS_HPP_
