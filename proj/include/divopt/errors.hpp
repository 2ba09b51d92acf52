// Copyright 2026 The divopt Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace divopt {

// All library failures derive from Error; kind() is the machine-readable tag
// the CLI copies into `error.kind`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed instance files or instances violating a data-model invariant.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input", message) {}
};

// A caller broke an operation precondition.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error("invalid-argument", message) {}
};

// Solutions drawn from different ground sets were compared.
class IncomparableSolutions : public Error {
 public:
  IncomparableSolutions() : Error("incomparable", "incomparable solutions") {}
};

// The instance has fewer than k distinct feasible solutions.
class NonExistentError : public Error {
 public:
  NonExistentError() : Error("non-existent", "fewer than k feasible solutions") {}
  explicit NonExistentError(const std::string& message)
      : Error("non-existent", message) {}
};

// A brute-force oracle refused an instance above its size guard.
class OracleGuardError : public Error {
 public:
  explicit OracleGuardError(const std::string& detail)
      : Error("oracle-guard", "instance too large for oracle: " + detail) {}
};

// Prime-field configuration cannot support the requested computation.
class FieldError : public Error {
 public:
  explicit FieldError(const std::string& message) : Error("field", message) {}
};

}  // namespace divopt
