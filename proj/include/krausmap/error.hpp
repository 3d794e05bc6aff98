// Copyright 2026 The krausmap Authors
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

namespace krausmap {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical parameter, time, step count or jump specification.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A closed form left its domain of validity (e.g. a negative discriminant).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// An evolved state failed validation beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Numerical range problem (overflow in the exponential, zero norm division).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace krausmap
