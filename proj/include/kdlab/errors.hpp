// Copyright 2026 The kdlab Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdlab {

/// Malformed textual input (group specs, JSON documents). Carries the
/// zero-based character offset where parsing failed, when known.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string &what) : std::invalid_argument(what), position_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

/// A computation was asked of inputs that violate its precondition
/// (non-Hermitian operator, non-state, mismatched groups, ...).
class PreconditionError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The half-order characteristic function needs an invertible doubling map.
class UnsupportedOrderError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// A configured size bound (e.g. for subgroup enumeration) was exceeded.
class BoundExceededError : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace kdlab
