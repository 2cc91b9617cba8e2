// Copyright 2026 The aosbenders Authors
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

#ifndef AOS_ERRORS_HPP_
#define AOS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace aos {

// Malformed input: dimension mismatches, bad schema fields, bad flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The problem violates a standing assumption of the decomposition
// (relatively complete recourse, finite optimum, dual non-emptiness).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical or algorithmic failure inside a solver (iteration limit,
// invalid warm basis, singular factorization).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aos

#endif  // AOS_ERRORS_HPP_
