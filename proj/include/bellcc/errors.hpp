// Copyright 2026 The bellcc Authors
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

#ifndef BELLCC_ERRORS_HPP_
#define BELLCC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bellcc {

// Root of every error thrown by the library. Callers that only need to know
// "the input was bad" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A matrix that should be Hermitian, a projector, a density operator, or an
// orthonormal basis is not one.
class InvalidOperatorError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an event whose probability is below the null tolerance.
class NullConditionError : public Error {
 public:
  using Error::Error;
};

// A behavior table violates range or normalization constraints.
class InvalidBehaviorError : public Error {
 public:
  using Error::Error;
};

// The CHSH oracle was asked about a signalling behavior.
class OracleInapplicableError : public Error {
 public:
  using Error::Error;
};

// A randomized search ran out of attempts.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

// Nothing in a common-cause check could be evaluated (every cell is null, or
// the partition has a single cell).
class UncheckableError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellcc

#endif  // BELLCC_ERRORS_HPP_
