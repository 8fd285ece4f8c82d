// Copyright 2026 The MBVQE Authors
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

namespace mbvqe {

/// Bad input to a public operation (range, arity, shape, duplicate targets).
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state or branch with zero norm was produced where a normalized one is required.
class DegenerateStateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A measurement plan cannot be made deterministic, or its dependencies form a cycle.
class PatternError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The cost function returned NaN or infinity.
class NonFiniteCostError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace mbvqe
