// Copyright 2026 The schatten authors
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

#ifndef SCHATTEN_CORE_ERRORS_HPP_
#define SCHATTEN_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace schatten {

// Shape disagreement between operands (maps to SCH_ERROR_DIMENSION_MISMATCH).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Input fails the Hermitian check (maps to SCH_ERROR_NOT_HERMITIAN).
class NotHermitianError : public std::invalid_argument {
 public:
  explicit NotHermitianError(const std::string& what) : std::invalid_argument(what) {}
};

// Solver non-convergence, overflow, or an arithmetic consistency failure.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schatten

#endif  // SCHATTEN_CORE_ERRORS_HPP_
