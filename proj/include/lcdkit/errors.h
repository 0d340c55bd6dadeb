// Copyright 2026 The lcdkit Authors
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

#ifndef LCDKIT_ERRORS_H
#define LCDKIT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcdkit {

/// Base of every error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller passed arguments that do not fit the operation (mixed fields, wrong shapes, bad flags).
struct UsageError : Error {
    using Error::Error;
};

/// Mathematical domain violation, e.g. inverting zero.
struct DomainError : Error {
    using Error::Error;
};

/// An operation's stated precondition does not hold for the given code.
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed code file, record file, or CSV.
struct ParseError : Error {
    using Error::Error;
};

struct RankDeficientError : Error {
    RankDeficientError(const std::string &what, size_t dependent_row) : Error(what), dependent_row(dependent_row) {
    }
    size_t dependent_row;
};

/// Shortening or puncturing removed every nonzero codeword.
struct EmptyCodeError : Error {
    using Error::Error;
};

/// An enumeration would exceed its work cap. `upper_bound` is the best distance seen so far (never exact);
/// `lower_bound` is what the algorithm had proven when it stopped (0 if nothing).
struct BudgetExceededError : Error {
    BudgetExceededError(const std::string &what, int upper_bound, int lower_bound)
        : Error(what), upper_bound(upper_bound), lower_bound(lower_bound) {
    }
    int upper_bound;
    int lower_bound;
};

struct NotInDualError : Error {
    using Error::Error;
};

struct WeightConditionError : Error {
    using Error::Error;
};

/// The symmetric form is alternating, so no orthonormal basis exists over GF(2).
struct NotOrthonormalizableError : Error {
    using Error::Error;
};

struct NotDecomposableError : Error {
    using Error::Error;
};

struct NoCandidateError : Error {
    using Error::Error;
};

/// Two bounds on the same cell contradict each other.
struct ConflictError : Error {
    using Error::Error;
};

/// A construction record refers to a base code that is not available.
struct MissingBaseError : Error {
    using Error::Error;
};

}  // namespace lcdkit

#endif
