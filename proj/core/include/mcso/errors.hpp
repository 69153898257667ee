// Copyright 2026 The mcso Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace mcso {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A closed-form result failed a self-consistency check (non-finite,
/// wrong sign, residual imaginary part). Signals a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is mathematically undefined for these inputs.
class UndefinedQuantityError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this state family.
class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

/// An iterative or adaptive procedure did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last, double previous)
      : Error(what), last_(last), previous_(previous) {}

  double last_estimate() const { return last_; }
  double previous_estimate() const { return previous_; }

 private:
  double last_;
  double previous_;
};

/// A resource bound (such as the maximum Fock cutoff) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Time integration lost accuracy (trace drift beyond tolerance).
class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcso
