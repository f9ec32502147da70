// Copyright 2026 The bellcc Authors
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

#ifndef BELLCC_TOOLS_CLI_HPP_
#define BELLCC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bellcc::cli {

// Runs one bellcc invocation. args excludes the program name. Always returns
// 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bellcc::cli

#endif  // BELLCC_TOOLS_CLI_HPP_
