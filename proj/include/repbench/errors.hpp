// Copyright 2026 Repbench Contributors
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

#ifndef REPBENCH_ERRORS_H
#define REPBENCH_ERRORS_H

#include <stdexcept>
#include <string>

namespace repbench {

/// Text input could not be tokenized/parsed. Carries 1-based position.
struct ParseError : std::runtime_error {
    ParseError(const std::string &msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

/// A result string does not match the register layout it claims to belong to.
struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The exact matching solver was asked for more defects than its limit.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A single injected error flipped a number of characters other than 0 or 2.
/// This violates the defining property of the syndrome convention and means
/// either the circuit or the processing is broken.
struct GraphConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure, annotated with the offending path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace repbench

#endif
