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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chanspec/linalg.h"

namespace chanspec::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNumerical = 2,
    kNegative = 3,
};

/// Malformed command-line input. `column()` is 1-based, 0 when unknown.
class UsageError : public std::runtime_error {
   public:
    UsageError(const std::string &message, std::size_t column = 0)
        : std::runtime_error(message), column_(column) {
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t column_;
};

/// Comma-separated complex numbers: "a", "bi", "a+bi", "a-bi", "i", "-i".
/// Whitespace is ignored. Throws UsageError carrying the column of the
/// first character that could not be consumed.
SpectrumMultiset parse_complex_multiset(std::string_view text);

/// Runs one command. `args` excludes the program name. Machine-readable
/// output goes to `out`, human-readable summaries to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chanspec::cli
