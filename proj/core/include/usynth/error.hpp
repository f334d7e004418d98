// Copyright 2026 The usynth Authors
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

#ifndef USYNTH_ERROR_HPP_
#define USYNTH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace usynth {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    NotHermitian,
    NotUnitary,
    NotDensity,
    NonFinite,
    ParseError,
    SdpFailure,
    EmptyCandidates,
    EmptySupport,
    EmptyPool,
    BudgetExceeded,
    CoveringUnreachable,
    BranchCut,
    MeshTooCoarse,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Raised by the synthesis pipeline when the deterministic subroutine cannot
/// reach the requested accuracy; `achieved_radius` is the best radius seen.
class CoveringUnreachableError : public Error {
   public:
    CoveringUnreachableError(const std::string &message, double achieved_radius)
        : Error(ErrorKind::CoveringUnreachable, message), achieved_radius_(achieved_radius) {}

    double achieved_radius() const noexcept { return achieved_radius_; }

   private:
    double achieved_radius_;
};

}  // namespace usynth

#endif  // USYNTH_ERROR_HPP_
