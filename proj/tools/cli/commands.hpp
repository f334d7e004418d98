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


#ifndef USYNTH_TOOLS_CLI_COMMANDS_HPP_
#define USYNTH_TOOLS_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "usynth/channels.hpp"
#include "usynth/linalg.hpp"

namespace usynth::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;  // bad flags, unreadable or invalid input
inline constexpr int kExitSdp = 3;
inline constexpr int kExitCovering = 4;

/// Runs one command. args excludes the program name. Normal output goes to
/// out, diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// A number or a multiple of pi: "0.3", "pi", "-pi/4", "2*pi/3", "3pi/2".
double parse_angle(std::string_view text);

/// I, X, Y, Z, H, S, Sdg, T, Tdg or Rz(angle). Throws ParseError otherwise.
Unitary named_unitary(std::string_view name);

/// A named unitary, or a JSON file holding a bare matrix, {"unitary": M} or
/// {"choi": M, "d1": n, "d2": m}.
ChoiOperator load_channel(const std::string &spec);

/// As load_channel, but Choi files are rejected.
Unitary load_unitary(const std::string &spec);

}  // namespace usynth::cli

#endif  // USYNTH_TOOLS_CLI_COMMANDS_HPP_
