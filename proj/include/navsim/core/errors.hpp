// Copyright 2026 The navsim Authors
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

#ifndef NAVSIM_CORE_ERRORS_HPP_
#define NAVSIM_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace navsim {

/// Base class for all domain errors raised by the library. Argument and
/// range violations use std::invalid_argument / std::out_of_range directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Routing
class UnreachableGoalError : public Error {
 public:
  using Error::Error;
};

// Frenet planning
class OffPathError : public Error {
 public:
  using Error::Error;
};
class SingularProjectionError : public Error {
 public:
  using Error::Error;
};
class NoFeasiblePathError : public Error {
 public:
  using Error::Error;
};

// Motion
class InfeasibleProfileError : public Error {
 public:
  using Error::Error;
};

// Control
class InfeasibleQpError : public Error {
 public:
  using Error::Error;
};
class LowSpeedError : public Error {
 public:
  using Error::Error;
};
class NoStateError : public Error {
 public:
  using Error::Error;
};

// Calibration
class InsufficientStructureError : public Error {
 public:
  using Error::Error;
};
class DegenerateCornerError : public Error {
 public:
  using Error::Error;
};
class AmbiguousMatchError : public Error {
 public:
  using Error::Error;
};
class MissingCalibrationError : public Error {
 public:
  using Error::Error;
};

// Simulation / IO
class ValidationError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace navsim

#endif  // NAVSIM_CORE_ERRORS_HPP_
