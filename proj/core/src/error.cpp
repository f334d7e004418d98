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

#include "usynth/error.hpp"

namespace usynth {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotDensity: return "NotDensity";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SdpFailure: return "SdpFailure";
        case ErrorKind::EmptyCandidates: return "EmptyCandidates";
        case ErrorKind::EmptySupport: return "EmptySupport";
        case ErrorKind::EmptyPool: return "EmptyPool";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::CoveringUnreachable: return "CoveringUnreachable";
        case ErrorKind::BranchCut: return "BranchCut";
        case ErrorKind::MeshTooCoarse: return "MeshTooCoarse";
    }
    return "Unknown";
}

}  // namespace usynth
