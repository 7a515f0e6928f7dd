// Copyright 2026 The Revnet Authors.
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

#ifndef REVNET_ERRORS_HPP_
#define REVNET_ERRORS_HPP_

#include <stdexcept>

namespace revnet {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value's width does not match the port count a gate or netlist expects.
class ArityError : public Error {
 public:
  using Error::Error;
};

// A request exceeds an exhaustive-enumeration bound (gate arity, line count
// or primary-input count too large to sweep).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Invalid line wiring: out-of-range or duplicate bindings, bad port
// ordinals in a composition, or malformed line declarations.
class WiringError : public Error {
 public:
  using Error::Error;
};

// A fault-injection site that does not exist in the target netlist.
class FaultSiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace revnet

#endif  // REVNET_ERRORS_HPP_
