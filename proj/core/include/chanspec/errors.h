// Copyright 2026 The chanspec Authors
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

namespace chanspec {

/// An input violated an operation's precondition. `reason()` is a short
/// machine-readable code (e.g. "not_square", "not_cp") suitable for JSON.
class PreconditionError : public std::invalid_argument {
   public:
    PreconditionError(std::string reason, const std::string &message)
        : std::invalid_argument(message), reason_(std::move(reason)) {
    }
    const std::string &reason() const noexcept {
        return reason_;
    }

   private:
    std::string reason_;
};

/// An iterative method failed to converge or a numerical self-check failed.
/// Never thrown for a well-posed input that merely has a negative answer.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace chanspec
