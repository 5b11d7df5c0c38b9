// Copyright 2026 The hemeval Authors.
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


// Command-line entry point. Exit codes: 0 success, 2 invalid input or
// usage, 1 internal error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hemeval::cli {

inline constexpr const char* kToolName = "hemeval";
inline constexpr const char* kVersion = "0.1.0";

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hemeval::cli
