// Copyright 2026 the iplp authors
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

namespace iplp {

enum class ErrorKind {
    Config,            // malformed or inconsistent configuration input
    InvalidArgument,   // precondition violation on a library call
    WrongModel,        // operation requires a different uncertainty model
    EmptyAfterFilter,  // no candidate has a strictly positive guaranteed objective
    DimensionLimit,    // problem exceeds the exact-enumeration guard
    BudgetExceeded,    // brute-force evaluation budget exceeded
    UnboundedFunction, // test function evaluated to a non-finite value
    RankDeficient,     // least-squares system singular
    Io,                // file system failure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Config: return "config";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::WrongModel: return "wrong-model";
    case ErrorKind::EmptyAfterFilter: return "empty-after-filter";
    case ErrorKind::DimensionLimit: return "dimension-limit";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::UnboundedFunction: return "unbounded-function";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

} // namespace iplp
