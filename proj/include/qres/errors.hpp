// Copyright 2026 The qutrit-resources Authors
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

#include <functional>
#include <stdexcept>
#include <string>

namespace qres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated (e.g. non-Hermitian input to a Hermitian solver).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that should be a density matrix is not one within tolerance.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// The fixed-step integrator drifted out of its trace tolerance or blew up.
class StepSizeError : public Error {
 public:
  StepSizeError(const std::string& what, double time, double trace_deviation)
      : Error(what), time_(time), trace_deviation_(trace_deviation) {}
  double time() const { return time_; }
  double trace_deviation() const { return trace_deviation_; }

 private:
  double time_;
  double trace_deviation_;
};

/// The Liouvillian null space is not one-dimensional.
class MultiplicityError : public Error {
 public:
  MultiplicityError(const std::string& what, int dimension) : Error(what), dimension_(dimension) {}
  int dimension() const { return dimension_; }

 private:
  int dimension_;
};

using WarningHandler = std::function<void(const std::string&)>;

/// Installs the sink for non-fatal diagnostics; returns the previous handler.
/// The default handler writes each distinct message to stderr once.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

}  // namespace qres
